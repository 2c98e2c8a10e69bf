//===- cells.cpp - Cell decomposition of definable sets -------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/cells.hpp"

namespace grothpres {

std::optional<BoundTerm> Component::upper_exclusive() const {
  if (!upper)
    return std::nullopt;
  return BoundTerm{upper->num + LinearTerm(Integer(1)), upper->den};
}

Conj Cell::constraints() const {
  Conj out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Fiber f;
    f.kind = comps[i].kind;
    f.point = comps[i].point;
    f.lower = comps[i].lower;
    f.upper = comps[i].upper;
    f.modulus = comps[i].modulus;
    f.residue = comps[i].residue;
    Conj c = fiber_constraints(f, vars[i]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

namespace {

Component to_component(const Fiber &f) {
  Component c;
  c.kind = f.kind;
  c.point = f.point;
  c.lower = f.lower;
  c.upper = f.upper;
  c.modulus = f.modulus;
  c.residue = f.residue;
  return c;
}

class Decomposer {
public:
  Decomposer(const std::vector<std::string> &vars, const ModelSpec &spec)
      : vars_(vars), spec_(spec) {}

  void run(const Conj &c, std::size_t n, std::vector<Component> &suffix,
           std::vector<Cell> &out) const {
    if (n == 0) {
      if (!simplify_conj(c, &spec_))
        return;
      Cell cell;
      cell.vars = vars_;
      cell.comps.assign(suffix.rbegin(), suffix.rend());
      out.push_back(std::move(cell));
      return;
    }
    const std::string &x = vars_[n - 1];
    for (const auto &f : split_last(c, x, &spec_)) {
      Dnf pieces = disjoint_dnf(fiber_nonempty(f, x, &spec_), &spec_);
      suffix.push_back(to_component(f));
      for (const auto &p : pieces) {
        Conj base = f.base;
        base.insert(base.end(), p.begin(), p.end());
        if (auto s = simplify_conj(std::move(base), &spec_))
          run(*s, n - 1, suffix, out);
      }
      suffix.pop_back();
    }
  }

private:
  const std::vector<std::string> &vars_;
  const ModelSpec &spec_;
};

} // namespace

std::vector<Cell> decompose(const Dnf &d, const std::vector<std::string> &vars,
                            const ModelSpec &spec) {
  std::vector<Cell> out;
  Decomposer dec(vars, spec);
  std::vector<Component> suffix;
  for (const auto &c : disjoint_dnf(d, &spec))
    dec.run(c, vars.size(), suffix, out);
  return out;
}

std::vector<Cell> decompose(const Formula &f, const ModelSpec &spec,
                            std::vector<std::string> vars) {
  if (vars.empty())
    vars = free_vars_ordered(f);
  return decompose(eliminate_dnf(f, &spec), vars, spec);
}

bool cell_contains(const Cell &c, const Assignment &point,
                   const ModelSpec &spec) {
  for (const auto &a : c.constraints()) {
    GroupElement v = eval_term(a.term, point, spec);
    bool ok = a.kind == LinAtom::Le   ? v.sign() <= 0
              : a.kind == LinAtom::Eq ? v.sign() == 0
                                      : residue(v, a.modulus) == 0;
    if (!ok)
      return false;
  }
  return true;
}

std::vector<LinearPiece> piecewise_linear(const Formula &graph,
                                          const std::vector<std::string> &inputs,
                                          const std::string &out,
                                          const ModelSpec &spec) {
  std::vector<LinearPiece> result;
  Decomposer dec(inputs, spec);
  auto emit = [&](const Conj &base, const BoundTerm &value) {
    std::vector<Cell> cells;
    std::vector<Component> suffix;
    for (const auto &c : disjoint_dnf({base}, &spec))
      dec.run(c, inputs.size(), suffix, cells);
    for (auto &cell : cells)
      result.push_back({std::move(cell), value});
  };
  Dnf d = disjoint_dnf(eliminate_dnf(graph, &spec), &spec);
  for (const auto &c : d) {
    for (const auto &f : split_last(c, out, &spec)) {
      if (f.kind == Fiber::Point) {
        emit(f.base, f.point);
        continue;
      }
      Conj ne = f.base;
      if (!f.lower || !f.upper) {
        if (satisfiable(ne, spec))
          throw NotAFunction("unbounded fiber in output coordinate");
        continue;
      }
      // Least element: x = (l - rho + aM[rho > 0]) / a where
      // rho = (l - a r) mod aM.
      const Integer &a = f.lower->den, &b = f.upper->den;
      const LinearTerm &l = f.lower->num, &u = f.upper->num;
      Integer A = a * f.modulus;
      for (Integer rho = 0; rho < A; ++rho) {
        LinearTerm num = l - LinearTerm(rho);
        if (rho > 0)
          num += LinearTerm(A);
        Conj base = f.base;
        base.push_back(LinAtom::dvd(A, l - LinearTerm(Integer(a * f.residue + rho))));
        base.push_back(LinAtom::le(num * b - u * a));
        auto s = simplify_conj(base, &spec);
        if (!s)
          continue;
        Conj second = *s;
        second.push_back(LinAtom::le((num + LinearTerm(A)) * b - u * a));
        if (satisfiable(second, spec))
          throw NotAFunction("fiber with more than one point");
        emit(*s, BoundTerm{num, a});
      }
    }
  }
  return result;
}

namespace {

GroupElement abs_elem(const GroupElement &g) { return g.sign() < 0 ? -g : g; }

GroupElement abs_bound(const BoundTerm &bt, const std::vector<GroupElement> &B,
                       const std::vector<std::string> &vars, std::size_t upto,
                       const ModelSpec &spec) {
  GroupElement sum = GroupElement::integer(spec.k, abs(bt.num.literal()));
  for (const auto &[v, c] : bt.num.vars()) {
    std::size_t i = 0;
    while (i < upto && vars[i] != v)
      ++i;
    if (i == upto)
      throw std::logic_error("cell bound mentions a later coordinate");
    sum += B[i] * Integer(abs(c));
  }
  for (const auto &[name, c] : bt.num.consts())
    sum += abs_elem(spec.constants.at(name) * c);
  return sum;
}

} // namespace

std::optional<GroupElement> is_bounded(const std::vector<Cell> &cells,
                                       const ModelSpec &spec) {
  GroupElement best = GroupElement::integer(spec.k, 1);
  for (const auto &cell : cells) {
    std::vector<GroupElement> B;
    for (std::size_t i = 0; i < cell.comps.size(); ++i) {
      const Component &c = cell.comps[i];
      GroupElement bi(spec.k);
      if (c.kind == Fiber::Point) {
        bi = abs_bound(c.point, B, cell.vars, i, spec);
      } else {
        if (!c.lower || !c.upper)
          return std::nullopt;
        bi = std::max(abs_bound(*c.lower, B, cell.vars, i, spec),
                      abs_bound(*c.upper, B, cell.vars, i, spec));
      }
      B.push_back(bi);
      GroupElement cand = bi + GroupElement::integer(spec.k, 1);
      if (cand > best)
        best = cand;
    }
  }
  return best;
}

std::optional<GroupElement> is_bounded(const Formula &f, const ModelSpec &spec) {
  return is_bounded(decompose(f, spec), spec);
}

namespace {

/// ceil (up = true) or floor of g / d in the group.
GroupElement div_round(const GroupElement &g, const Integer &d, bool up) {
  GroupElement q(g.k());
  for (std::size_t i = 1; i <= g.k(); ++i)
    q.set_coord(i, g.coord(i) / Rational(d));
  Integer z;
  if (up)
    mpz_cdiv_q(z.get_mpz_t(), g.int_coord().get_mpz_t(), d.get_mpz_t());
  else
    mpz_fdiv_q(z.get_mpz_t(), g.int_coord().get_mpz_t(), d.get_mpz_t());
  q.set_int_coord(z);
  return q;
}

constexpr std::size_t kEnumerateLimit = 10000000;

void enumerate_cell(const Cell &cell, std::size_t i, Assignment &at,
                    std::vector<GroupElement> &prefix, const ModelSpec &spec,
                    std::vector<std::vector<GroupElement>> &out) {
  if (i == cell.comps.size()) {
    if (out.size() >= kEnumerateLimit)
      throw std::length_error("enumeration limit exceeded");
    out.push_back(prefix);
    return;
  }
  const Component &c = cell.comps[i];
  const std::string &x = cell.vars[i];
  auto visit = [&](const GroupElement &v) {
    at[x] = v;
    prefix.push_back(v);
    enumerate_cell(cell, i + 1, at, prefix, spec, out);
    prefix.pop_back();
    at.erase(x);
  };
  if (c.kind == Fiber::Point) {
    visit(div_round(eval_term(c.point.num, at, spec), c.point.den, false));
    return;
  }
  if (!c.lower || !c.upper)
    throw InfiniteSet("unbounded fiber");
  GroupElement lo =
      div_round(eval_term(c.lower->num, at, spec), c.lower->den, true);
  GroupElement hi =
      div_round(eval_term(c.upper->num, at, spec), c.upper->den, false);
  Integer shift;
  Integer diff = c.residue - lo.int_coord();
  mpz_fdiv_r(shift.get_mpz_t(), diff.get_mpz_t(), c.modulus.get_mpz_t());
  lo += GroupElement::integer(spec.k, shift);
  if (hi < lo)
    return;
  if ((hi - lo).sig() >= 1)
    throw InfiniteSet("interval of infinite length");
  GroupElement step = GroupElement::integer(spec.k, c.modulus);
  for (GroupElement v = lo; v <= hi; v += step)
    visit(v);
}

} // namespace

std::vector<std::vector<GroupElement>>
enumerate_finite(const Formula &f, const ModelSpec &spec,
                 std::vector<std::string> vars) {
  if (vars.empty())
    vars = free_vars_ordered(f);
  std::vector<std::vector<GroupElement>> out;
  for (const auto &cell : decompose(f, spec, vars)) {
    Assignment at;
    std::vector<GroupElement> prefix;
    enumerate_cell(cell, 0, at, prefix, spec, out);
  }
  return out;
}

} // namespace grothpres
