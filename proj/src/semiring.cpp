//===- semiring.cpp - Profiles, multidimensions and class normal forms ----===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/semiring.hpp"

#include <json.hpp>

#include <algorithm>

namespace grothpres {

bool profile_leq(const Profile &a, const Profile &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Profile profile_add(const Profile &a, const Profile &b) {
  Profile out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

MDim maximal(std::vector<Profile> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  MDim out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ps.size() && !dominated; ++j)
      dominated = i != j && profile_leq(ps[i], ps[j]);
    if (!dominated)
      out.push_back(ps[i]);
  }
  return out;
}

bool mdim_leq(const MDim &d, const MDim &dp) {
  for (const auto &x : d) {
    bool found = false;
    for (const auto &y : dp)
      if (profile_leq(x, y)) {
        found = true;
        break;
      }
    if (!found)
      return false;
  }
  return true;
}

Profile monomial_profile(const std::vector<Factor> &factors, std::size_t k) {
  Profile p(k + 1, 0);
  for (const auto &f : factors) {
    if (!f.infinite && f.value.sign() <= 0)
      throw std::invalid_argument("nonpositive factor");
    int s = f.sig(k);
    for (std::size_t i = 0; i <= k; ++i)
      if (s > static_cast<int>(i))
        ++p[i];
  }
  return p;
}

Profile poly_monomial_profile(const Monomial &m, std::size_t k) {
  Profile p(k + 1, 0);
  for (const auto &[v, e] : m) {
    // b_{v+1} has significance v+1
    for (std::size_t i = 0; i <= v && i <= k; ++i)
      p[i] += e;
  }
  return p;
}

Polynomial reduce(const Polynomial &p, const MDim &mdim_u, std::size_t k) {
  if (mdim_u.empty())
    return p;
  Polynomial out;
  for (const auto &[m, c] : p.terms()) {
    Profile pr = poly_monomial_profile(m, k);
    bool dominated = std::any_of(mdim_u.begin(), mdim_u.end(),
                                 [&](const Profile &u) { return profile_leq(pr, u); });
    if (!dominated)
      out += Polynomial::monomial(m, c);
  }
  return out;
}

ClassNF class_zero(std::size_t k) { return {k, {}, Polynomial()}; }
ClassNF class_one(std::size_t k) { return {k, {}, Polynomial(1)}; }
ClassNF class_bounded(Polynomial p, std::size_t k) {
  return {k, {}, std::move(p)};
}

ClassNF class_of_profile(const Profile &d) {
  std::size_t k = d.size() - 1;
  if (d[k] >= 1)
    return {k, {d}, Polynomial()};
  // Bounded representative: prod b_i^{d_{i-1} - d_i}.
  Monomial m;
  for (std::size_t i = 1; i <= k; ++i)
    if (d[i - 1] > d[i])
      m.emplace_back(static_cast<std::uint32_t>(i - 1), d[i - 1] - d[i]);
  return {k, {}, Polynomial::monomial(m)};
}

Polynomial embed(const GroupElement &g) {
  Polynomial p(g.int_coord());
  for (std::size_t j = 1; j <= g.k(); ++j)
    p += Polynomial::variable(static_cast<std::uint32_t>(j - 1)) *
         Polynomial(g.coord(j));
  return p;
}

ClassNF canonicalize(const MonomialSum &s) {
  std::vector<Profile> unb;
  Polynomial bounded;
  for (const auto &t : s.terms) {
    bool inf = std::any_of(t.factors.begin(), t.factors.end(),
                           [](const Factor &f) { return f.infinite; });
    if (inf) {
      if (t.coeff > 0)
        unb.push_back(monomial_profile(t.factors, s.k));
      continue;
    }
    Polynomial p(t.coeff);
    for (const auto &f : t.factors) {
      if (f.value.sign() <= 0)
        throw std::invalid_argument("nonpositive factor");
      p *= embed(f.value);
    }
    bounded += p;
  }
  ClassNF out{s.k, maximal(std::move(unb)), Polynomial()};
  out.bounded = reduce(bounded, out.mdim_u, s.k);
  return out;
}

ClassNF class_add(const ClassNF &x, const ClassNF &y) {
  std::vector<Profile> u = x.mdim_u;
  u.insert(u.end(), y.mdim_u.begin(), y.mdim_u.end());
  ClassNF out{x.k, maximal(std::move(u)), Polynomial()};
  out.bounded = reduce(x.bounded + y.bounded, out.mdim_u, x.k);
  return out;
}

ClassNF class_mul(const ClassNF &x, const ClassNF &y) {
  std::vector<Profile> u;
  for (const auto &a : x.mdim_u)
    for (const auto &b : y.mdim_u)
      u.push_back(profile_add(a, b));
  for (const auto &a : x.mdim_u)
    for (const auto &kv : y.bounded.terms())
      u.push_back(profile_add(a, poly_monomial_profile(kv.first, x.k)));
  for (const auto &kv : x.bounded.terms())
    for (const auto &b : y.mdim_u)
      u.push_back(profile_add(poly_monomial_profile(kv.first, x.k), b));
  ClassNF out{x.k, maximal(std::move(u)), Polynomial()};
  out.bounded = reduce(x.bounded * y.bounded, out.mdim_u, x.k);
  return out;
}

MDim full_mdim(const ClassNF &x) {
  std::vector<Profile> ps = x.mdim_u;
  for (const auto &kv : x.bounded.terms())
    ps.push_back(poly_monomial_profile(kv.first, x.k));
  return maximal(std::move(ps));
}

bool eats_rel(const ClassNF &a, const ClassNF &b) {
  return mdim_leq(full_mdim(b), a.mdim_u);
}

std::string b_name(std::uint32_t v) { return "b" + std::to_string(v + 1); }

std::string profile_to_string(const Profile &p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string mdim_to_string(const MDim &d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i)
      out += ", ";
    out += profile_to_string(d[i]);
  }
  return out + "}";
}

std::string ClassNF::to_string() const {
  std::string out;
  // Unbounded part: representative monomials inf^{d_k} prod b_i^{d_{i-1}-d_i}.
  for (auto it = mdim_u.rbegin(); it != mdim_u.rend(); ++it) {
    const Profile &d = *it;
    std::string m = "inf";
    if (d[k] > 1)
      m += "^" + std::to_string(d[k]);
    for (std::size_t i = 1; i <= k; ++i) {
      unsigned e = d[i - 1] - d[i];
      if (e == 0)
        continue;
      m += "*b" + std::to_string(i);
      if (e > 1)
        m += "^" + std::to_string(e);
    }
    if (!out.empty())
      out += " + ";
    out += m;
  }
  if (!bounded.is_zero()) {
    std::string b = bounded.to_string(b_name);
    if (out.empty())
      out = b;
    else if (b[0] == '-')
      out += " - " + b.substr(1);
    else
      out += " + " + b;
  }
  return out.empty() ? "0" : out;
}

std::string ClassNF::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["mdim"] = nlohmann::json::array();
  for (const auto &d : mdim_u)
    j["mdim"].push_back(d);
  j["bounded"] = nlohmann::json::array();
  for (const auto &[m, c] : bounded.terms()) {
    std::vector<unsigned> exps(k, 0);
    for (const auto &[v, e] : m)
      exps[v] = e;
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["exps"] = exps;
    j["bounded"].push_back(t);
  }
  return j.dump();
}

ClassNF ClassNF::from_json(const std::string &text) {
  try {
    auto j = nlohmann::json::parse(text);
    ClassNF out;
    out.k = j.at("k").get<std::size_t>();
    for (const auto &d : j.at("mdim")) {
      Profile p = d.get<Profile>();
      if (p.size() != out.k + 1)
        throw std::invalid_argument("profile of wrong length");
      out.mdim_u.push_back(std::move(p));
    }
    for (const auto &t : j.at("bounded")) {
      auto exps = t.at("exps").get<std::vector<unsigned>>();
      if (exps.size() != out.k)
        throw std::invalid_argument("exponent vector of wrong length");
      Monomial m;
      for (std::size_t v = 0; v < exps.size(); ++v)
        if (exps[v])
          m.emplace_back(static_cast<std::uint32_t>(v), exps[v]);
      Rational c(t.at("coeff").get<std::string>());
      c.canonicalize();
      out.bounded += Polynomial::monomial(m, c);
    }
    return out;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("bad class JSON: ") + e.what());
  }
}

} // namespace grothpres
