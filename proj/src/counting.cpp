//===- counting.cpp - Parametric lattice-point counting -------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/counting.hpp"

#include "grothpres/fiber.hpp"

#include <map>

namespace grothpres {

namespace {

using IndexMap = std::map<std::string, std::uint32_t>;

Polynomial to_poly(const LinearTerm &t, const IndexMap &idx) {
  Polynomial p(t.literal());
  auto add = [&](const std::string &name, const Integer &c) {
    auto it = idx.find(name);
    if (it == idx.end())
      throw std::logic_error("unexpected symbol '" + name + "' in count");
    p += Polynomial::variable(it->second) * Polynomial(c);
  };
  for (const auto &[v, c] : t.vars())
    add(v, c);
  for (const auto &[v, c] : t.consts())
    add(v, c);
  return p;
}

class Counter {
public:
  Counter(const std::vector<std::string> &xvars,
          const std::vector<std::string> &symbols, const ModelSpec *model)
      : xvars_(xvars), model_(model) {
    std::uint32_t i = 0;
    for (const auto &s : symbols)
      idx_[s] = i++;
    for (const auto &x : xvars)
      idx_[x] = i++;
    t_index_ = i;
  }

  void run(const Conj &c, std::size_t n, const Polynomial &W,
           std::vector<CountPiece> &out) const {
    if (n == 0) {
      if (auto g = simplify_conj(c, model_))
        out.push_back({std::move(*g), W, false});
      return;
    }
    const std::string &x = xvars_[n - 1];
    const std::uint32_t xi = idx_.at(x);
    for (const auto &f : split_last(c, x, model_)) {
      if (f.kind == Fiber::Point) {
        Polynomial v = to_poly(f.point.num, idx_) *
                       Polynomial(Rational(Integer(1), f.point.den));
        run(f.base, n - 1, W.substitute(xi, v), out);
        continue;
      }
      if (!f.lower || !f.upper) {
        std::vector<std::string> rest(xvars_.begin(), xvars_.begin() + (n - 1));
        Dnf proj = exists_all(rest, {f.base}, model_);
        for (auto &g : disjoint_dnf(proj, model_))
          out.push_back({std::move(g), Polynomial(), true});
        continue;
      }
      const Integer &a = f.lower->den, &b = f.upper->den, &M = f.modulus;
      const LinearTerm ell = f.lower->num - LinearTerm(Integer(a * f.residue));
      const LinearTerm mu = f.upper->num - LinearTerm(Integer(b * f.residue));
      const Integer A = a * M, B = b * M;
      Polynomial T = Polynomial::variable(t_index_);
      Polynomial Wt = W.substitute(xi, Polynomial(f.residue) + Polynomial(M) * T);
      Polynomial ell_p = to_poly(ell, idx_), mu_p = to_poly(mu, idx_);
      for (Integer rho = 0; rho < A; ++rho) {
        Conj brho = f.base;
        brho.push_back(LinAtom::dvd(A, ell - LinearTerm(rho)));
        auto sr = simplify_conj(std::move(brho), model_);
        if (!sr)
          continue;
        Integer bump = rho > 0 ? Integer(1) : Integer(0);
        Polynomial lo = (ell_p - Polynomial(rho)) * Polynomial(Rational(Integer(1), A)) +
                        Polynomial(bump);
        for (Integer sigma = 0; sigma < B; ++sigma) {
          Conj base = *sr;
          base.push_back(LinAtom::dvd(B, mu - LinearTerm(sigma)));
          // t_lo <= t_hi, scaled by A*B
          base.push_back(LinAtom::le((ell - LinearTerm(rho)) * B +
                                     LinearTerm(Integer(A * B * bump)) -
                                     (mu - LinearTerm(sigma)) * A));
          auto s = simplify_conj(std::move(base), model_);
          if (!s)
            continue;
          Polynomial hi =
              (mu_p - Polynomial(sigma)) * Polynomial(Rational(Integer(1), B));
          run(*s, n - 1, sum_over(Wt, t_index_, lo, hi), out);
        }
      }
    }
  }

private:
  const std::vector<std::string> &xvars_;
  const ModelSpec *model_;
  IndexMap idx_;
  std::uint32_t t_index_;
};

} // namespace

Dnf inline_constants(const Dnf &d, const ModelSpec &spec) {
  if (spec.k != 0)
    throw std::invalid_argument("constants can only be inlined for k = 0");
  Dnf out;
  for (const auto &c : d) {
    Conj nc;
    for (const auto &a : c) {
      LinearTerm t = a.term.linear_part();
      Integer lit = a.term.literal();
      for (const auto &[name, coeff] : a.term.consts()) {
        t.set_const_coeff(name, 0);
        lit += coeff * spec.constants.at(name).int_coord();
      }
      t.set_literal(lit);
      LinAtom na = a;
      na.term = t;
      nc.push_back(std::move(na));
    }
    out.push_back(std::move(nc));
  }
  return out;
}

std::vector<CountPiece> raw_count(const Dnf &d,
                                  const std::vector<std::string> &xvars,
                                  const std::vector<std::string> &symbols,
                                  const ModelSpec *model) {
  Counter counter(xvars, symbols, model);
  std::vector<CountPiece> out;
  for (const auto &c : d)
    counter.run(c, xvars.size(), Polynomial(1), out);
  return out;
}

std::vector<CountPiece> refine_pieces(const std::vector<CountPiece> &pieces,
                                      const ModelSpec &model) {
  std::vector<CountPiece> parts{{Conj{}, Polynomial(), false}};
  for (const auto &p : pieces) {
    std::vector<CountPiece> next;
    Dnf outside = disjoint_negation(p.guard, &model);
    for (const auto &q : parts) {
      Conj in = q.guard;
      in.insert(in.end(), p.guard.begin(), p.guard.end());
      if (auto s = simplify_conj(std::move(in), &model); s && satisfiable(*s, model))
        next.push_back({std::move(*s), p.infinite || q.infinite
                                           ? Polynomial()
                                           : q.count + p.count,
                        p.infinite || q.infinite});
      for (const auto &n : outside) {
        Conj out = q.guard;
        out.insert(out.end(), n.begin(), n.end());
        if (auto s = simplify_conj(std::move(out), &model);
            s && satisfiable(*s, model))
          next.push_back({std::move(*s), q.count, q.infinite});
      }
    }
    parts = std::move(next);
  }
  return parts;
}

std::vector<CountPiece> count_family(const Formula &f,
                                     const std::vector<std::string> &params,
                                     const ModelSpec &spec) {
  std::set<std::string> pset(params.begin(), params.end());
  std::vector<std::string> xvars;
  for (const auto &v : free_vars_ordered(f))
    if (!pset.count(v))
      xvars.push_back(v);
  Dnf d = eliminate_dnf(f, &spec);
  if (spec.k == 0)
    d = inline_constants(d, spec);
  d = vars_to_consts(d, pset);
  d = disjoint_dnf(d, &spec);
  auto raw = raw_count(d, xvars, params, &spec);
  for (auto &p : raw)
    p.guard = consts_to_vars(p.guard, pset);
  return refine_pieces(raw, spec);
}

std::optional<Integer> evaluate_count(const std::vector<CountPiece> &pieces,
                                      const std::vector<std::string> &params,
                                      const std::vector<Integer> &values,
                                      const ModelSpec &spec) {
  Assignment at;
  std::map<std::uint32_t, Rational> pv;
  for (std::size_t i = 0; i < params.size(); ++i) {
    at[params[i]] = GroupElement::integer(spec.k, values[i]);
    pv[static_cast<std::uint32_t>(i)] = Rational(values[i]);
  }
  for (const auto &p : pieces) {
    if (!eval_qf(to_formula(p.guard), at, spec))
      continue;
    if (p.infinite)
      return std::nullopt;
    Rational r = p.count.evaluate(pv);
    if (r.get_den() != 1)
      throw std::logic_error("non-integral count");
    return r.get_num();
  }
  return Integer(0);
}

Polynomial hyper_card(const Dnf &d, const std::vector<std::string> &xvars,
                      const ModelSpec &spec) {
  std::vector<std::string> symbols;
  for (const auto &kv : spec.constants)
    symbols.push_back(kv.first);
  auto raw = raw_count(disjoint_dnf(d, &spec), xvars, symbols, &spec);
  Polynomial total;
  for (const auto &p : raw) {
    if (!p.guard.empty())
      throw std::logic_error("undecided guard in hyper-cardinality");
    if (p.infinite)
      throw Unbounded("unbounded set");
    total += p.count;
  }
  // Move symbols out of the way of b_1..b_k, then embed.
  const std::uint32_t offset = static_cast<std::uint32_t>(spec.k) + 1;
  total = total.rename([offset](std::uint32_t v) { return v + offset; });
  for (std::size_t i = 0; i < symbols.size(); ++i)
    total = total.substitute(static_cast<std::uint32_t>(i) + offset,
                             embed(spec.constants.at(symbols[i])));
  return total;
}

Polynomial hyper_card(const Formula &f, const ModelSpec &spec) {
  return hyper_card(eliminate_dnf(f, &spec), free_vars_ordered(f), spec);
}

} // namespace grothpres
