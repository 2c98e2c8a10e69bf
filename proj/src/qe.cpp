//===- qe.cpp - Cooper quantifier elimination -----------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/qe.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace grothpres {

namespace {

Integer cdiv_q(const Integer &a, const Integer &b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fmod(const Integer &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer lcm(const Integer &a, const Integer &b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// gcd of all variable and constant coefficients (0 if there are none).
Integer content(const LinearTerm &t) {
  Integer g = 0;
  for (const auto &kv : t.vars())
    g = gcd(g, kv.second);
  for (const auto &kv : t.consts())
    g = gcd(g, kv.second);
  return g;
}

LinearTerm map_coeffs(const LinearTerm &t,
                      const std::function<Integer(const Integer &)> &f,
                      Integer literal) {
  LinearTerm out(std::move(literal));
  for (const auto &[v, c] : t.vars())
    out.set_var_coeff(v, f(c));
  for (const auto &[v, c] : t.consts())
    out.set_const_coeff(v, f(c));
  return out;
}

int leading_sign(const LinearTerm &t) {
  if (!t.vars().empty())
    return sgn(t.vars().begin()->second);
  if (!t.consts().empty())
    return sgn(t.consts().begin()->second);
  return 0;
}

bool constants_known(const LinearTerm &t, const ModelSpec *model) {
  if (!model)
    return t.consts().empty();
  for (const auto &kv : t.consts())
    if (!model->constants.count(kv.first))
      return false;
  return true;
}

enum class Verdict { True, False, Keep };

Verdict decide_ground(const LinAtom &a, const ModelSpec *model) {
  if (a.term.has_vars() || !constants_known(a.term, model))
    return Verdict::Keep;
  bool holds;
  if (a.term.consts().empty()) {
    const Integer &l = a.term.literal();
    holds = a.kind == LinAtom::Le   ? l <= 0
            : a.kind == LinAtom::Eq ? l == 0
                                    : fmod(l, a.modulus) == 0;
  } else {
    GroupElement v = eval_term(a.term, {}, *model);
    holds = a.kind == LinAtom::Le   ? v.sign() <= 0
            : a.kind == LinAtom::Eq ? v.sign() == 0
                                    : residue(v, a.modulus) == 0;
  }
  return holds ? Verdict::True : Verdict::False;
}

Verdict normalize_atom(LinAtom &a, const ModelSpec *model) {
  Verdict v = decide_ground(a, model);
  if (v != Verdict::Keep)
    return v;
  if (a.kind == LinAtom::Dvd) {
    if (a.modulus < 0)
      a.modulus = -a.modulus;
    if (a.modulus == 1)
      return Verdict::True;
    if (a.modulus == 0) {
      a.kind = LinAtom::Eq;
      a.modulus = 0;
      return normalize_atom(a, model);
    }
    const Integer m = a.modulus;
    a.term = map_coeffs(
        a.term, [&m](const Integer &c) { return fmod(c, m); },
        fmod(a.term.literal(), m));
    Integer g = gcd(m, content(a.term));
    if (fmod(a.term.literal(), g) != 0)
      return Verdict::False;
    if (!a.term.has_vars() && a.term.consts().empty())
      return Verdict::True; // literal divisible by g = m
    a.modulus = m / g;
    a.term = map_coeffs(
        a.term, [&g](const Integer &c) { return Integer(c / g); },
        a.term.literal() / g);
    if (a.modulus == 1)
      return Verdict::True;
    return decide_ground(a, model);
  }
  Integer g = content(a.term);
  if (g == 0)
    return decide_ground(a, model); // unknown constants only reach here
  if (a.kind == LinAtom::Le) {
    if (g != 1)
      a.term = map_coeffs(
          a.term, [&g](const Integer &c) { return Integer(c / g); },
          cdiv_q(a.term.literal(), g));
    return Verdict::Keep;
  }
  if (fmod(a.term.literal(), g) != 0)
    return Verdict::False;
  if (g != 1)
    a.term = map_coeffs(
        a.term, [&g](const Integer &c) { return Integer(c / g); },
        a.term.literal() / g);
  if (leading_sign(a.term) < 0)
    a.term = -a.term;
  return Verdict::Keep;
}

/// Solves x = r1 (mod m1), x = r2 (mod m2); nullopt if inconsistent.
std::optional<std::pair<Integer, Integer>> crt(const Integer &r1, const Integer &m1,
                                               const Integer &r2, const Integer &m2) {
  Integer g = gcd(m1, m2);
  if (fmod(r2 - r1, g) != 0)
    return std::nullopt;
  Integer M = lcm(m1, m2);
  Integer m1g = m1 / g, m2g = m2 / g;
  Integer inv = 0;
  if (m2g != 1)
    mpz_invert(inv.get_mpz_t(), m1g.get_mpz_t(), m2g.get_mpz_t());
  Integer k = fmod(Integer((r2 - r1) / g) * inv, m2g);
  return std::make_pair(fmod(r1 + m1 * k, M), M);
}

/// One merging pass; sets `changed` when a new atom kind appears.
std::optional<Conj> merge_pass(const Conj &atoms, bool &changed,
                               const ModelSpec *model) {
  changed = false;
  std::map<LinearTerm, Integer> les;            // lin + lit <= 0, max lit
  std::map<LinearTerm, Integer> eqs;            // lin + lit = 0
  std::map<LinearTerm, std::pair<Integer, Integer>> dvds; // lin = r (mod m)
  for (const auto &a : atoms) {
    LinearTerm lin = a.term.linear_part();
    const Integer &lit = a.term.literal();
    if (a.kind == LinAtom::Le) {
      auto [it, fresh] = les.emplace(lin, lit);
      if (!fresh && lit > it->second)
        it->second = lit;
    } else if (a.kind == LinAtom::Eq) {
      auto [it, fresh] = eqs.emplace(lin, lit);
      if (!fresh && it->second != lit)
        return std::nullopt;
    } else {
      Integer r = fmod(-lit, a.modulus);
      auto it = dvds.find(lin);
      if (it == dvds.end()) {
        dvds.emplace(lin, std::make_pair(r, a.modulus));
      } else {
        auto merged = crt(it->second.first, it->second.second, r, a.modulus);
        if (!merged)
          return std::nullopt;
        it->second = *merged;
      }
    }
  }
  Conj out;
  // Equalities fix their linear part; check the other atoms against them.
  for (const auto &[lin, lit] : eqs) {
    // lin = -lit
    for (int s : {1, -1}) {
      LinearTerm key = s > 0 ? lin : -lin;
      auto it = les.find(key);
      if (it != les.end()) {
        // s*lin + l <= 0  with lin = -lit
        Integer val = -s * lit + it->second;
        if (val > 0)
          return std::nullopt;
        les.erase(it);
      }
    }
    auto it = dvds.find(lin);
    if (it != dvds.end()) {
      if (fmod(-lit - it->second.first, it->second.second) != 0)
        return std::nullopt;
      dvds.erase(it);
    }
    out.push_back(LinAtom::eq(lin + LinearTerm(lit)));
  }
  std::set<LinearTerm> consumed;
  for (const auto &[lin, lit] : les) {
    if (consumed.count(lin))
      continue;
    LinearTerm neg = -lin;
    auto it = les.find(neg);
    if (it != les.end()) {
      // lin <= -lit and lin >= it->second
      Integer lo = it->second, hi = -lit;
      if (lo > hi)
        return std::nullopt;
      if (lo == hi) {
        consumed.insert(lin);
        consumed.insert(neg);
        LinAtom e = LinAtom::eq(lin - LinearTerm(lo));
        if (normalize_atom(e, model) == Verdict::False)
          return std::nullopt;
        out.push_back(e);
        changed = true;
        continue;
      }
    }
    out.push_back(LinAtom::le(lin + LinearTerm(lit)));
  }
  for (const auto &[lin, rm] : dvds) {
    LinAtom d = LinAtom::dvd(rm.second, lin - LinearTerm(rm.first));
    Verdict v = normalize_atom(d, model);
    if (v == Verdict::False)
      return std::nullopt;
    if (v == Verdict::Keep)
      out.push_back(d);
  }
  return out;
}

} // namespace

bool operator==(const LinAtom &a, const LinAtom &b) {
  return a.kind == b.kind && a.modulus == b.modulus && a.term == b.term;
}

bool operator<(const LinAtom &a, const LinAtom &b) {
  if (a.kind != b.kind)
    return a.kind < b.kind;
  if (int c = compare(a.term, b.term))
    return c < 0;
  return a.modulus < b.modulus;
}

std::optional<Conj> simplify_conj(Conj c, const ModelSpec *model) {
  Conj atoms;
  atoms.reserve(c.size());
  for (auto &a : c) {
    Verdict v = normalize_atom(a, model);
    if (v == Verdict::False)
      return std::nullopt;
    if (v == Verdict::Keep)
      atoms.push_back(std::move(a));
  }
  for (;;) {
    bool changed = false;
    auto merged = merge_pass(atoms, changed, model);
    if (!merged)
      return std::nullopt;
    atoms = std::move(*merged);
    if (!changed)
      break;
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

namespace {

bool subset_of(const Conj &a, const Conj &b) {
  // Both sorted.
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void dedupe(Dnf &d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.size() > 1500)
    return;
  // Drop disjuncts implied by a weaker one (superset of atoms).
  std::vector<bool> dead(d.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (dead[i])
      continue;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && !dead[j] && d[i].size() <= d[j].size() &&
          subset_of(d[i], d[j]))
        dead[j] = true;
  }
  Dnf out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!dead[i])
      out.push_back(std::move(d[i]));
  d = std::move(out);
}

} // namespace

Dnf simplify_dnf(const Dnf &d, const ModelSpec *model) {
  Dnf out;
  for (const auto &c : d)
    if (auto s = simplify_conj(c, model))
      out.push_back(std::move(*s));
  dedupe(out);
  return out;
}

Dnf dnf_and(const Dnf &a, const Dnf &b, const ModelSpec *model) {
  Dnf out;
  for (const auto &x : a)
    for (const auto &y : b) {
      Conj c = x;
      c.insert(c.end(), y.begin(), y.end());
      if (auto s = simplify_conj(std::move(c), model))
        out.push_back(std::move(*s));
    }
  dedupe(out);
  return out;
}

Dnf dnf_or(Dnf a, const Dnf &b) {
  a.insert(a.end(), b.begin(), b.end());
  dedupe(a);
  return a;
}

Dnf negate_atom(const LinAtom &a) {
  switch (a.kind) {
  case LinAtom::Le:
    return {{LinAtom::le(-a.term + LinearTerm(Integer(1)))}};
  case LinAtom::Eq:
    return {{LinAtom::le(a.term + LinearTerm(Integer(1)))},
            {LinAtom::le(-a.term + LinearTerm(Integer(1)))}};
  case LinAtom::Dvd: {
    Dnf out;
    for (Integer r = 1; r < a.modulus; ++r)
      out.push_back({LinAtom::dvd(a.modulus, a.term - LinearTerm(r))});
    return out;
  }
  }
  return {};
}

Dnf negate(const Dnf &d, const ModelSpec *model) {
  Dnf acc{Conj{}};
  for (const auto &c : d) {
    Dnf alt;
    for (const auto &a : c) {
      Dnf n = negate_atom(a);
      alt.insert(alt.end(), n.begin(), n.end());
    }
    acc = dnf_and(acc, alt, model);
    if (acc.empty())
      break;
  }
  return acc;
}

Dnf disjoint_negation(const Conj &c, const ModelSpec *model) {
  Dnf out;
  Conj prefix;
  for (const auto &a : c) {
    for (const auto &n : negate_atom(a)) {
      Conj piece = prefix;
      piece.insert(piece.end(), n.begin(), n.end());
      if (auto s = simplify_conj(std::move(piece), model))
        out.push_back(std::move(*s));
    }
    prefix.push_back(a);
  }
  return out;
}

Dnf disjoint_dnf(const Dnf &d, const ModelSpec *model) {
  Dnf out;
  Dnf simplified;
  for (const auto &c : d)
    if (auto s = simplify_conj(c, model))
      simplified.push_back(std::move(*s));
  std::sort(simplified.begin(), simplified.end());
  simplified.erase(std::unique(simplified.begin(), simplified.end()),
                   simplified.end());
  for (std::size_t i = 0; i < simplified.size(); ++i) {
    Dnf pieces{simplified[i]};
    for (std::size_t j = 0; j < i && !pieces.empty(); ++j) {
      Dnf next;
      Dnf neg = disjoint_negation(simplified[j], model);
      for (const auto &p : pieces)
        for (const auto &n : neg) {
          Conj c = p;
          c.insert(c.end(), n.begin(), n.end());
          if (auto s = simplify_conj(std::move(c), model))
            next.push_back(std::move(*s));
        }
      pieces = std::move(next);
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

namespace {

Dnf atom_to_dnf(Cmp c, const LinearTerm &d) {
  const LinearTerm one(Integer(1));
  switch (c) {
  case Cmp::Lt:
    return {{LinAtom::le(d + one)}};
  case Cmp::Le:
    return {{LinAtom::le(d)}};
  case Cmp::Eq:
    return {{LinAtom::eq(d)}};
  case Cmp::Ne:
    return {{LinAtom::le(d + one)}, {LinAtom::le(-d + one)}};
  case Cmp::Ge:
    return {{LinAtom::le(-d)}};
  case Cmp::Gt:
    return {{LinAtom::le(-d + one)}};
  }
  return {};
}

class Eliminator {
public:
  explicit Eliminator(const ModelSpec *model) : model_(model) {}

  Dnf run(const Formula &f) {
    return std::visit(
        [&](const auto &x) -> Dnf {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Formula::True>) {
            return {Conj{}};
          } else if constexpr (std::is_same_v<T, Formula::False>) {
            return {};
          } else if constexpr (std::is_same_v<T, Formula::Atom>) {
            return simplify_dnf(atom_to_dnf(x.cmp, x.lhs - x.rhs), model_);
          } else if constexpr (std::is_same_v<T, Formula::Cong>) {
            return simplify_dnf(
                {{LinAtom::dvd(x.modulus, x.term - LinearTerm(x.residue))}},
                model_);
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            return negate(run(x.body), model_);
          } else if constexpr (std::is_same_v<T, Formula::And>) {
            Dnf acc{Conj{}};
            for (const auto &a : x.args) {
              acc = dnf_and(acc, run(a), model_);
              if (acc.empty())
                break;
            }
            return acc;
          } else if constexpr (std::is_same_v<T, Formula::Or>) {
            Dnf acc;
            for (const auto &a : x.args)
              acc = dnf_or(std::move(acc), run(a));
            return acc;
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            return dnf_or(negate(run(x.lhs), model_), run(x.rhs));
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            return exists_dnf(x.var, run(x.body), model_);
          } else {
            Dnf inner = negate(run(x.body), model_);
            return negate(exists_dnf(x.var, inner, model_), model_);
          }
        },
        f.node());
  }

private:
  const ModelSpec *model_;
};

} // namespace

Dnf to_dnf(const Formula &f, const ModelSpec *model) {
  if (!is_quantifier_free(f))
    throw std::invalid_argument("to_dnf on a quantified formula");
  return Eliminator(model).run(f);
}

Formula to_formula(const Conj &c) {
  std::vector<Formula> parts;
  for (const auto &a : c) {
    LinearTerm lin = a.term.linear_part();
    Integer lit = a.term.literal();
    switch (a.kind) {
    case LinAtom::Le:
      if (leading_sign(lin) < 0)
        parts.push_back(Formula::atom(Cmp::Ge, -lin, LinearTerm(lit)));
      else
        parts.push_back(Formula::atom(Cmp::Le, lin, LinearTerm(-lit)));
      break;
    case LinAtom::Eq:
      parts.push_back(Formula::atom(Cmp::Eq, lin, LinearTerm(-lit)));
      break;
    case LinAtom::Dvd:
      if (lin.is_zero())
        parts.push_back(Formula::cong(a.modulus, LinearTerm(lit), 0));
      else
        parts.push_back(Formula::cong(a.modulus, lin, fmod(-lit, a.modulus)));
      break;
    }
  }
  return Formula::conj(std::move(parts));
}

Formula to_formula(const Dnf &d) {
  std::vector<Formula> parts;
  for (const auto &c : d)
    parts.push_back(to_formula(c));
  return Formula::disj(std::move(parts));
}

Dnf exists_conj(const std::string &var, const Conj &c, const ModelSpec *model) {
  Conj rest;
  std::vector<std::pair<Integer, LinAtom>> with;
  for (const auto &a : c) {
    Integer k = a.term.var_coeff(var);
    if (k == 0)
      rest.push_back(a);
    else
      with.emplace_back(k, a);
  }
  auto finish = [&](Dnf d) { return simplify_dnf(d, model); };
  if (with.empty())
    return finish({c});

  // Equality: substitute x = -s/a.
  int best = -1;
  for (std::size_t i = 0; i < with.size(); ++i)
    if (with[i].second.kind == LinAtom::Eq &&
        (best < 0 || abs(with[i].first) < abs(with[best].first)))
      best = static_cast<int>(i);
  if (best >= 0) {
    Integer a = with[best].first;
    LinearTerm t = with[best].second.term;
    if (a < 0) {
      a = -a;
      t = -t;
    }
    LinearTerm s = t.substitute(var, LinearTerm());
    Conj out = rest;
    for (std::size_t i = 0; i < with.size(); ++i) {
      if (static_cast<int>(i) == best)
        continue;
      const auto &[ci, atom] = with[i];
      LinearTerm r = atom.term.substitute(var, LinearTerm());
      LinAtom n = atom;
      n.term = r * a - s * ci;
      if (n.kind == LinAtom::Dvd)
        n.modulus = atom.modulus * a;
      out.push_back(std::move(n));
    }
    if (a > 1)
      out.push_back(LinAtom::dvd(a, s));
    return finish({out});
  }

  // Scale every coefficient of x to +-L and work with x' = L x.
  Integer L = 1;
  for (const auto &w : with)
    L = lcm(L, abs(w.first));
  struct Scaled {
    LinAtom::Kind kind;
    int sign;
    LinearTerm rest;
    Integer modulus;
  };
  std::vector<Scaled> scaled;
  for (const auto &[ci, atom] : with) {
    Integer f = L / abs(ci);
    LinearTerm r = atom.term.substitute(var, LinearTerm()) * f;
    scaled.push_back({atom.kind, sgn(ci), r, atom.modulus * f});
  }
  if (L > 1)
    scaled.push_back({LinAtom::Dvd, 1, LinearTerm(), L});

  std::vector<LinearTerm> lowers, uppers;
  Integer D = 1;
  for (const auto &s : scaled) {
    if (s.kind == LinAtom::Le) {
      if (s.sign < 0)
        lowers.push_back(s.rest); // x' >= rest
      else
        uppers.push_back(-s.rest); // x' <= -rest
    } else {
      D = lcm(D, s.modulus);
    }
  }
  auto instantiate = [&](const LinearTerm &value, bool with_bounds) {
    Conj out = rest;
    for (const auto &s : scaled) {
      if (s.kind == LinAtom::Le && !with_bounds)
        continue;
      LinearTerm t = s.rest + (s.sign > 0 ? value : -value);
      out.push_back(s.kind == LinAtom::Dvd ? LinAtom::dvd(s.modulus, t)
                                           : LinAtom{s.kind, t, 0});
    }
    return out;
  };

  Dnf out;
  auto push = [&](Conj c) {
    if (auto s = simplify_conj(std::move(c), model))
      out.push_back(std::move(*s));
  };
  if (lowers.empty() || uppers.empty()) {
    for (Integer j = 0; j < D; ++j)
      push(instantiate(LinearTerm(j), false));
  } else if (lowers.size() <= uppers.size()) {
    for (const auto &b : lowers)
      for (Integer j = 0; j < D; ++j)
        push(instantiate(b + LinearTerm(j), true));
  } else {
    for (const auto &u : uppers)
      for (Integer j = 0; j < D; ++j)
        push(instantiate(u - LinearTerm(j), true));
  }
  dedupe(out);
  return out;
}

Dnf exists_dnf(const std::string &var, const Dnf &d, const ModelSpec *model) {
  Dnf out;
  for (const auto &c : d) {
    Dnf e = exists_conj(var, c, model);
    out.insert(out.end(), e.begin(), e.end());
  }
  dedupe(out);
  return out;
}

Dnf exists_all(const std::vector<std::string> &vars, const Dnf &d,
               const ModelSpec *model) {
  Dnf out = d;
  for (const auto &v : vars)
    out = exists_dnf(v, out, model);
  return out;
}

Dnf eliminate_dnf(const Formula &f, const ModelSpec *model) {
  return Eliminator(model).run(normalize(f));
}

Formula eliminate(const Formula &f) { return to_formula(eliminate_dnf(f)); }

Formula simplify(const Formula &f) { return to_formula(to_dnf(f)); }

std::set<std::string> vars_of(const Conj &c) {
  std::set<std::string> out;
  for (const auto &a : c)
    for (const auto &kv : a.term.vars())
      out.insert(kv.first);
  return out;
}

std::set<std::string> vars_of(const Dnf &d) {
  std::set<std::string> out;
  for (const auto &c : d) {
    auto v = vars_of(c);
    out.insert(v.begin(), v.end());
  }
  return out;
}

namespace {

/// Picks the variable whose elimination is cheapest.
std::string pick_var(const Conj &c) {
  std::map<std::string, std::pair<int, int>> bounds;
  std::set<std::string> in_eq;
  for (const auto &a : c)
    for (const auto &[v, k] : a.term.vars()) {
      auto &b = bounds[v];
      if (a.kind == LinAtom::Eq)
        in_eq.insert(v);
      else if (a.kind == LinAtom::Le)
        (k > 0 ? b.second : b.first)++;
    }
  if (!in_eq.empty())
    return *in_eq.begin();
  std::string best;
  long cost = -1;
  for (const auto &[v, b] : bounds) {
    long cst = static_cast<long>(std::min(b.first, b.second));
    if (cost < 0 || cst < cost) {
      cost = cst;
      best = v;
    }
  }
  return best;
}

bool sat_rec(const Conj &c, const ModelSpec &model) {
  if (vars_of(c).empty()) {
    auto s = simplify_conj(c, &model);
    return s.has_value();
  }
  std::string v = pick_var(c);
  for (const auto &n : exists_conj(v, c, &model))
    if (sat_rec(n, model))
      return true;
  return false;
}

} // namespace

bool satisfiable(const Conj &c, const ModelSpec &model) {
  auto s = simplify_conj(c, &model);
  return s && sat_rec(*s, model);
}

bool satisfiable(const Dnf &d, const ModelSpec &model) {
  for (const auto &c : d)
    if (satisfiable(c, model))
      return true;
  return false;
}

Conj consts_to_vars(const Conj &c, const std::set<std::string> &names) {
  Conj out = c;
  for (auto &a : out)
    for (const auto &n : names)
      a.term = a.term.const_to_var(n);
  return out;
}

Dnf consts_to_vars(const Dnf &d, const std::set<std::string> &names) {
  Dnf out;
  for (const auto &c : d)
    out.push_back(consts_to_vars(c, names));
  return out;
}

Conj vars_to_consts(const Conj &c, const std::set<std::string> &names) {
  Conj out = c;
  for (auto &a : out)
    for (const auto &n : names)
      a.term = a.term.var_to_const(n);
  return out;
}

Dnf vars_to_consts(const Dnf &d, const std::set<std::string> &names) {
  Dnf out;
  for (const auto &c : d)
    out.push_back(vars_to_consts(c, names));
  return out;
}

Conj substitute(const Conj &c, const std::string &var, const LinearTerm &value) {
  Conj out = c;
  for (auto &a : out)
    a.term = a.term.substitute(var, value);
  return out;
}

std::string to_string(const LinAtom &a) {
  switch (a.kind) {
  case LinAtom::Le:
    return a.term.to_string() + " <= 0";
  case LinAtom::Eq:
    return a.term.to_string() + " = 0";
  case LinAtom::Dvd:
    return a.modulus.get_str() + " | " + a.term.to_string();
  }
  return "";
}

} // namespace grothpres
