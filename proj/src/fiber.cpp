//===- fiber.cpp - Splitting a conjunction along its last variable --------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/fiber.hpp"

namespace grothpres {

std::string BoundTerm::to_string() const {
  if (den == 1)
    return num.to_string();
  bool simple = num.vars().size() + num.consts().size() +
                    (num.literal() != 0 ? 1 : 0) <=
                1;
  std::string n = num.to_string();
  return (simple ? n : "(" + n + ")") + "/" + den.get_str();
}

namespace {

Integer lcm_z(const Integer &a, const Integer &b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

} // namespace

std::vector<Fiber> split_last(const Conj &c, const std::string &var,
                              const ModelSpec *model) {
  std::vector<Fiber> out;
  auto simplified = simplify_conj(c, model);
  if (!simplified)
    return out;
  Conj rest;
  struct Occ {
    Integer coeff;
    LinAtom atom;
    LinearTerm other; // atom term without the var
  };
  std::vector<Occ> occ;
  for (const auto &a : *simplified) {
    Integer k = a.term.var_coeff(var);
    if (k == 0)
      rest.push_back(a);
    else
      occ.push_back({k, a, a.term.substitute(var, LinearTerm())});
  }

  int best = -1;
  for (std::size_t i = 0; i < occ.size(); ++i)
    if (occ[i].atom.kind == LinAtom::Eq &&
        (best < 0 || abs(occ[i].coeff) < abs(occ[best].coeff)))
      best = static_cast<int>(i);
  if (best >= 0) {
    // a x + s = 0, a > 0
    Integer a = occ[best].coeff;
    LinearTerm s = occ[best].other;
    if (a < 0) {
      a = -a;
      s = -s;
    }
    Conj base = rest;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (static_cast<int>(i) == best)
        continue;
      LinAtom n = occ[i].atom;
      n.term = occ[i].other * a - s * occ[i].coeff;
      if (n.kind == LinAtom::Dvd)
        n.modulus *= a;
      base.push_back(std::move(n));
    }
    if (a > 1)
      base.push_back(LinAtom::dvd(a, s));
    auto b = simplify_conj(std::move(base), model);
    if (!b)
      return out;
    Fiber f;
    f.kind = Fiber::Point;
    f.point = {-s, a};
    f.base = std::move(*b);
    out.push_back(std::move(f));
    return out;
  }

  std::vector<BoundTerm> lowers, uppers;
  std::vector<const Occ *> congs;
  Integer M = 1;
  for (const auto &o : occ) {
    if (o.atom.kind == LinAtom::Le) {
      if (o.coeff < 0)
        lowers.push_back({o.other, -o.coeff}); // |c| x >= other
      else
        uppers.push_back({-o.other, o.coeff}); // c x <= -other
    } else {
      congs.push_back(&o);
      const Integer &m = o.atom.modulus;
      M = lcm_z(M, Integer(m / gcd(o.coeff, m)));
    }
  }

  // Constraints selecting lower i as the maximum (first index on ties).
  auto select = [](const std::vector<BoundTerm> &bs, std::size_t i, bool max) {
    Conj sel;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (j == i)
        continue;
      // max: l_j/a_j <= l_i/a_i  <=>  a_i l_j - a_j l_i <= 0
      // min: u_i/b_i <= u_j/b_j  <=>  b_j u_i - b_i u_j <= 0
      LinearTerm t = max ? bs[j].num * bs[i].den - bs[i].num * bs[j].den
                         : bs[i].num * bs[j].den - bs[j].num * bs[i].den;
      if (j < i)
        t += LinearTerm(Integer(1));
      sel.push_back(LinAtom::le(t));
    }
    return sel;
  };

  std::size_t nl = std::max<std::size_t>(lowers.size(), 1);
  std::size_t nu = std::max<std::size_t>(uppers.size(), 1);
  for (Integer r = 0; r < M; ++r) {
    Conj rbase = rest;
    for (const Occ *o : congs) {
      LinAtom n = o->atom;
      n.term = o->other + LinearTerm(Integer(o->coeff * r));
      rbase.push_back(std::move(n));
    }
    auto rb = simplify_conj(std::move(rbase), model);
    if (!rb)
      continue;
    for (std::size_t i = 0; i < nl; ++i) {
      Conj lbase = *rb;
      if (!lowers.empty()) {
        Conj s = select(lowers, i, true);
        lbase.insert(lbase.end(), s.begin(), s.end());
      }
      for (std::size_t j = 0; j < nu; ++j) {
        Conj base = lbase;
        if (!uppers.empty()) {
          Conj s = select(uppers, j, false);
          base.insert(base.end(), s.begin(), s.end());
        }
        auto b = simplify_conj(std::move(base), model);
        if (!b)
          continue;
        Fiber f;
        f.kind = Fiber::Interval;
        if (!lowers.empty())
          f.lower = lowers[i];
        if (!uppers.empty())
          f.upper = uppers[j];
        f.modulus = M;
        f.residue = r;
        f.base = std::move(*b);
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

Conj fiber_constraints(const Fiber &f, const std::string &var) {
  Conj c;
  LinearTerm x = LinearTerm::variable(var);
  if (f.kind == Fiber::Point) {
    c.push_back(LinAtom::eq(x * f.point.den - f.point.num));
    return c;
  }
  if (f.lower)
    c.push_back(LinAtom::le(f.lower->num - x * f.lower->den));
  if (f.upper)
    c.push_back(LinAtom::le(x * f.upper->den - f.upper->num));
  if (f.modulus > 1)
    c.push_back(LinAtom::dvd(f.modulus, x - LinearTerm(f.residue)));
  return c;
}

Dnf fiber_nonempty(const Fiber &f, const std::string &var,
                   const ModelSpec *model) {
  if (f.kind == Fiber::Point || !f.lower || !f.upper)
    return {Conj{}};
  return exists_conj(var, fiber_constraints(f, var), model);
}

} // namespace grothpres
