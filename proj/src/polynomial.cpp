//===- polynomial.cpp - Sparse multivariate rational polynomials ----------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/polynomial.hpp"

#include <algorithm>

namespace grothpres {

std::uint32_t exponent_of(const Monomial &m, std::uint32_t var) {
  for (const auto &[v, e] : m)
    if (v == var)
      return e;
  return 0;
}

std::uint32_t total_degree(const Monomial &m) {
  std::uint32_t d = 0;
  for (const auto &p : m)
    d += p.second;
  return d;
}

Monomial monomial_mul(const Monomial &a, const Monomial &b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      out.push_back(*ia++);
    else if (ia == a.end() || ib->first < ia->first)
      out.push_back(*ib++);
    else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial::Polynomial(const Rational &c) {
  if (c != 0)
    terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::uint32_t v) {
  return monomial({{v, 1}});
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const { return coefficient({}); }

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree_in(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto &kv : terms_)
    d = std::max(d, exponent_of(kv.first, v));
  return d;
}

Polynomial Polynomial::coefficient_in(std::uint32_t v, std::uint32_t e) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    if (exponent_of(m, v) != e)
      continue;
    Monomial rest;
    for (const auto &p : m)
      if (p.first != v)
        rest.push_back(p);
    out.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::uint32_t v,
                                  const Polynomial &value) const {
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    std::uint32_t e = 0;
    Monomial rest;
    for (const auto &p : m) {
      if (p.first == v)
        e = p.second;
      else
        rest.push_back(p);
    }
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    while (powers.size() <= e)
      powers.push_back(powers.back() * value);
    out += monomial(rest, c) * powers[e];
  }
  return out;
}

Polynomial
Polynomial::rename(const std::function<std::uint32_t(std::uint32_t)> &f) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    Monomial r;
    for (const auto &[v, e] : m)
      r = monomial_mul(r, Monomial{{f(v), e}});
    out.add_term(r, c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::uint32_t, Rational> &at) const {
  Rational sum = 0;
  for (const auto &[m, c] : terms_) {
    Rational t = c;
    for (const auto &[v, e] : m) {
      auto it = at.find(v);
      if (it == at.end())
        throw std::invalid_argument("polynomial variable without value");
      for (std::uint32_t i = 0; i < e; ++i)
        t *= it->second;
    }
    sum += t;
  }
  return sum;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial out;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto &kv : out.terms_)
    kv.second = -kv.second;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out(1), base = *this;
  while (e) {
    if (e & 1)
      out *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return out;
}

std::string Polynomial::to_string(
    const std::function<std::string(std::uint32_t)> &name) const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<Monomial, Rational>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto &x, const auto &y) {
    return total_degree(x.first) > total_degree(y.first);
  });
  std::string out;
  for (const auto &[m, c] : order) {
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (const auto &[v, e] : m) {
      if (!mono.empty())
        mono += "*";
      mono += name(v);
      if (e > 1)
        mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::vector<Rational> bernoulli_plus(unsigned n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1 gives B^-; flip B_1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    Integer binom = 1; // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / Rational(m + 1);
  }
  if (n >= 1)
    b[1] = Rational(1, 2);
  return b;
}

Polynomial faulhaber(unsigned p, std::uint32_t T) {
  // sum_{t=1}^{T} t^p = 1/(p+1) sum_j C(p+1, j) B+_j T^{p+1-j}
  auto b = bernoulli_plus(p);
  Polynomial out;
  Integer binom = 1;
  for (unsigned j = 0; j <= p; ++j) {
    Rational c = Rational(binom) * b[j] / Rational(p + 1);
    out += Polynomial::monomial({{T, p + 1 - j}}, c);
    binom = binom * (p + 1 - j) / (j + 1);
  }
  if (p == 0)
    out += Polynomial(1);
  return out;
}

Polynomial sum_over(const Polynomial &g, std::uint32_t t, const Polynomial &lo,
                    const Polynomial &hi) {
  // Use a scratch variable index above everything in sight.
  std::uint32_t scratch = t;
  auto bump = [&scratch](const Polynomial &p) {
    for (const auto &kv : p.terms())
      for (const auto &ve : kv.first)
        scratch = std::max(scratch, ve.first);
  };
  bump(g);
  bump(lo);
  bump(hi);
  ++scratch;
  Polynomial out;
  Polynomial lo_minus = lo - Polynomial(1);
  for (std::uint32_t e = 0, d = g.degree_in(t); e <= d; ++e) {
    Polynomial c = g.coefficient_in(t, e);
    if (c.is_zero())
      continue;
    Polynomial F = faulhaber(e, scratch);
    out += c * (F.substitute(scratch, hi) - F.substitute(scratch, lo_minus));
  }
  return out;
}

} // namespace grothpres
