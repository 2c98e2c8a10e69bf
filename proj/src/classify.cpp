//===- classify.cpp - Classes, dimensions and bijection decisions ---------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/classify.hpp"

#include "grothpres/fiber.hpp"

#include <map>
#include <set>

namespace grothpres {

namespace {

std::string fresh_constant(const ModelSpec &spec, const std::set<std::string> &taken) {
  std::string name = "R";
  for (int i = 0; spec.constants.count(name) || taken.count(name); ++i)
    name = "R_" + std::to_string(i);
  return name;
}

} // namespace

ClassNF grothendieck_class(const Dnf &d, const std::vector<std::string> &xvars,
                           const ModelSpec &spec) {
  const std::size_t k = spec.k;
  // Cut the set with the box [-R, R) where R is a new unit one level above
  // everything in sight, then read the class off the R-dependence.
  ModelSpec big;
  big.k = k + 1;
  for (const auto &[name, g] : spec.constants)
    big.constants[name] = g.lifted(k + 1);
  std::set<std::string> taken(xvars.begin(), xvars.end());
  const std::string R = fresh_constant(spec, taken);
  big.constants[R] = GroupElement::unit(k + 1, k + 1);

  Conj box;
  for (const auto &x : xvars) {
    box.push_back(LinAtom::le(-LinearTerm::variable(x) - LinearTerm::constant(R)));
    box.push_back(LinAtom::le(LinearTerm::variable(x) - LinearTerm::constant(R) +
                              LinearTerm(Integer(1))));
  }
  Dnf cut = dnf_and(d, {box}, &big);
  Polynomial P = hyper_card(cut, xvars, big);

  const std::uint32_t rvar = static_cast<std::uint32_t>(k);
  std::vector<Profile> unb;
  Polynomial bounded;
  for (const auto &[m, c] : P.terms()) {
    std::uint32_t e = exponent_of(m, rvar);
    if (e == 0) {
      bounded += Polynomial::monomial(m, c);
      continue;
    }
    Profile pr(k + 1, e);
    for (const auto &[v, f] : m)
      if (v != rvar)
        for (std::size_t i = 0; i <= v; ++i)
          pr[i] += f;
    unb.push_back(std::move(pr));
  }
  ClassNF out{k, maximal(std::move(unb)), Polynomial()};
  out.bounded = reduce(bounded, out.mdim_u, k);
  return out;
}

ClassNF grothendieck_class(const Formula &f, const ModelSpec &spec) {
  return grothendieck_class(eliminate_dnf(f, &spec), free_vars_ordered(f), spec);
}

EquivResult decide_equiv(const Formula &f1, const Formula &f2,
                         const ModelSpec &spec) {
  EquivResult r{false, grothendieck_class(f1, spec), grothendieck_class(f2, spec)};
  r.equivalent = r.first == r.second;
  return r;
}

MDim mdim_of(const Formula &f, const ModelSpec &spec) {
  return full_mdim(grothendieck_class(f, spec));
}

std::optional<unsigned> dim_level(const Formula &f, std::size_t level,
                                  const ModelSpec &spec) {
  if (level > spec.k)
    throw std::invalid_argument("level out of range");
  MDim d = mdim_of(f, spec);
  if (d.empty())
    return std::nullopt;
  unsigned best = 0;
  for (const auto &p : d)
    best = std::max(best, p[level]);
  return best;
}

namespace {

using IndexMap = std::map<std::string, std::uint32_t>;

Polynomial to_poly(const LinearTerm &t, const IndexMap &idx) {
  Polynomial p(t.literal());
  for (const auto &[v, c] : t.vars())
    p += Polynomial::variable(idx.at(v)) * Polynomial(c);
  if (!t.consts().empty())
    throw std::logic_error("constant left in family term");
  return p;
}

// Does q vanish at every integer point of c? Variables are params[0..n).
class Vanish {
public:
  Vanish(const std::vector<std::string> &params, const ModelSpec &spec)
      : params_(params), spec_(spec) {
    for (std::uint32_t i = 0; i < params.size(); ++i)
      idx_[params[i]] = i;
    t_ = static_cast<std::uint32_t>(params.size());
  }

  bool run(const Conj &c, std::size_t n, const Polynomial &q) const {
    if (q.is_zero())
      return true;
    auto sc = simplify_conj(c, &spec_);
    if (!sc || !satisfiable(*sc, spec_))
      return true;
    if (n == 0)
      return false; // nonzero constant on a nonempty ground region
    const std::string &y = params_[n - 1];
    const std::uint32_t yi = idx_.at(y);
    if (!q.mentions(yi)) {
      Dnf proj = exists_dnf(y, {*sc}, &spec_);
      for (const auto &b : proj)
        if (!run(b, n - 1, q))
          return false;
      return true;
    }
    for (const auto &f : split_last(*sc, y, &spec_)) {
      if (f.kind == Fiber::Point) {
        Polynomial v = to_poly(f.point.num, idx_) *
                       Polynomial(Rational(Integer(1), f.point.den));
        if (!run(f.base, n - 1, q.substitute(yi, v)))
          return false;
        continue;
      }
      const Integer &M = f.modulus;
      Polynomial qt = q.substitute(
          yi, Polynomial(f.residue) + Polynomial(M) * Polynomial::variable(t_));
      const std::uint32_t D = qt.degree_in(t_);
      if (!f.lower || !f.upper) {
        // Infinitely many t: every coefficient has to vanish.
        for (std::uint32_t e = 0; e <= D; ++e)
          if (!run(f.base, n - 1, qt.coefficient_in(t_, e)))
            return false;
        continue;
      }
      const Integer &a = f.lower->den, &b = f.upper->den;
      const LinearTerm ell = f.lower->num - LinearTerm(Integer(a * f.residue));
      const LinearTerm mu = f.upper->num - LinearTerm(Integer(b * f.residue));
      const Integer A = a * M, B = b * M;
      Polynomial ell_p = to_poly(ell, idx_);
      for (Integer rho = 0; rho < A; ++rho) {
        Integer bump = rho > 0 ? Integer(1) : Integer(0);
        Polynomial lo = (ell_p - Polynomial(rho)) * Polynomial(Rational(Integer(1), A)) +
                        Polynomial(bump);
        for (Integer sigma = 0; sigma < B; ++sigma) {
          Conj base = f.base;
          base.push_back(LinAtom::dvd(A, ell - LinearTerm(rho)));
          base.push_back(LinAtom::dvd(B, mu - LinearTerm(sigma)));
          // AB * (t_hi - t_lo - s)
          auto span = [&](const Integer &s) {
            return (mu - LinearTerm(sigma)) * A - (ell - LinearTerm(rho)) * B -
                   LinearTerm(Integer(A * B * (bump + s)));
          };
          // At least D+1 values of t.
          Conj wide = base;
          wide.push_back(LinAtom::le(-span(Integer(D))));
          for (std::uint32_t e = 0; e <= D; ++e)
            if (!run(wide, n - 1, qt.coefficient_in(t_, e)))
              return false;
          // Exactly s+1 values, s < D.
          for (std::uint32_t s = 0; s < D; ++s) {
            Conj narrow = base;
            narrow.push_back(LinAtom::eq(span(Integer(s))));
            for (std::uint32_t i = 0; i <= s; ++i)
              if (!run(narrow, n - 1,
                       qt.substitute(t_, lo + Polynomial(static_cast<long>(i)))))
                return false;
          }
        }
      }
    }
    return true;
  }

private:
  const std::vector<std::string> &params_;
  const ModelSpec &spec_;
  IndexMap idx_;
  std::uint32_t t_;
};

} // namespace

bool family_equiv(const Formula &f1, const Formula &f2,
                  const std::vector<std::string> &params,
                  const Formula &domain, const ModelSpec &spec) {
  if (spec.k != 0)
    throw std::invalid_argument("families are only supported for k = 0");
  std::set<std::string> pset(params.begin(), params.end());
  for (const auto &v : free_vars(domain))
    if (!pset.count(v))
      throw std::invalid_argument("domain mentions non-parameter '" + v + "'");

  auto raw_of = [&](const Formula &f, bool negate_count) {
    std::vector<std::string> xvars;
    for (const auto &v : free_vars_ordered(f))
      if (!pset.count(v))
        xvars.push_back(v);
    Dnf d = vars_to_consts(inline_constants(eliminate_dnf(f, &spec), spec), pset);
    auto raw = raw_count(disjoint_dnf(d, &spec), xvars, params, &spec);
    for (auto &p : raw) {
      p.guard = consts_to_vars(p.guard, pset);
      if (negate_count)
        p.count = Polynomial(-1) * p.count;
    }
    return raw;
  };
  auto pieces = raw_of(f1, false);
  auto second = raw_of(f2, true);
  pieces.insert(pieces.end(), second.begin(), second.end());

  Dnf dom = disjoint_dnf(inline_constants(eliminate_dnf(domain, &spec), spec), &spec);

  // Infinite fibers anywhere on the domain are refused up front.
  for (const auto &p : pieces) {
    if (!p.infinite)
      continue;
    for (const auto &dc : dom) {
      Conj c = p.guard;
      c.insert(c.end(), dc.begin(), dc.end());
      auto s = simplify_conj(std::move(c), &spec);
      if (s && satisfiable(*s, spec))
        throw UnboundedFiber("infinite fiber over the domain", to_formula(*s));
    }
  }

  Vanish vanish(params, spec);
  for (const auto &part : refine_pieces(pieces, spec)) {
    for (const auto &dc : dom) {
      Conj c = part.guard;
      c.insert(c.end(), dc.begin(), dc.end());
      if (!vanish.run(c, params.size(), part.count))
        return false;
    }
  }
  return true;
}

} // namespace grothpres
