//===- support.hpp - Shared helpers for the test binaries -------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_TESTS_SUPPORT_HPP
#define GROTHPRES_TESTS_SUPPORT_HPP

#include "grothpres/classify.hpp"
#include "grothpres/oracle.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace grothpres {
// Readable gtest failure messages.
inline void PrintTo(const ClassNF &c, std::ostream *os) { *os << c.to_string(); }
inline void PrintTo(const Polynomial &p, std::ostream *os) { *os << p.to_string(b_name); }
inline void PrintTo(const GroupElement &g, std::ostream *os) { *os << g.to_string(); }
} // namespace grothpres

namespace gptest {

using namespace grothpres;

inline Formula bind_params(Formula f, const std::vector<std::string> &ps,
                           const std::vector<long> &vals) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    f = substitute(f, ps[i], LinearTerm(Integer(vals[i])));
  return f;
}

inline int uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Positive element of Q^k x Z with small coordinates; sig chosen uniformly.
inline GroupElement random_positive(std::mt19937_64 &rng, std::size_t k) {
  std::size_t s = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k)));
  GroupElement g = GroupElement::integer(k, 0);
  if (s == 0) {
    g.set_int_coord(Integer(uniform(rng, 1, 4)));
    return g;
  }
  g.set_coord(s, Rational(Integer(uniform(rng, 1, 3)), Integer(uniform(rng, 1, 2))));
  for (std::size_t j = 1; j < s; ++j)
    g.set_coord(j, Rational(Integer(uniform(rng, -2, 2)), Integer(uniform(rng, 1, 3))));
  g.set_int_coord(Integer(uniform(rng, -3, 3)));
  return g;
}

inline MonomialSum random_sum(std::mt19937_64 &rng, std::size_t k, int max_terms = 3,
                              int max_factors = 3, int inf_weight = 1) {
  MonomialSum s;
  s.k = k;
  int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    MonoTerm t;
    t.coeff = uniform(rng, 1, 3);
    int nf = uniform(rng, 0, max_factors);
    for (int j = 0; j < nf; ++j) {
      if (uniform(rng, 0, 3) < inf_weight)
        t.factors.push_back(Factor::inf());
      else
        t.factors.push_back(Factor::of(random_positive(rng, k)));
    }
    s.terms.push_back(std::move(t));
  }
  return s;
}

// A definable set whose class is the sum: a tagged disjoint union of
// products of intervals [0, c) and rays [0, inf). Constants are added to
// `spec` under fresh names.
inline Formula sum_formula(const MonomialSum &s, ModelSpec &spec) {
  std::size_t width = 0;
  for (const auto &t : s.terms)
    width = std::max(width, t.factors.size());
  std::vector<Formula> pieces;
  long tag = 0;
  for (const auto &t : s.terms) {
    for (Integer c = 0; c < t.coeff; ++c, ++tag) {
      std::vector<Formula> conj{Formula::atom(Cmp::Eq, LinearTerm::variable("tag"),
                                              LinearTerm(Integer(tag)))};
      for (std::size_t j = 0; j < width; ++j) {
        LinearTerm x = LinearTerm::variable("x" + std::to_string(j + 1));
        if (j >= t.factors.size()) {
          conj.push_back(Formula::atom(Cmp::Eq, x, LinearTerm()));
          continue;
        }
        conj.push_back(Formula::atom(Cmp::Ge, x, LinearTerm()));
        if (t.factors[j].infinite)
          continue;
        std::string name = "c" + std::to_string(spec.constants.size());
        spec.constants[name] = t.factors[j].value;
        conj.push_back(Formula::atom(Cmp::Lt, x, LinearTerm::constant(name)));
      }
      pieces.push_back(Formula::conj(std::move(conj)));
    }
  }
  return Formula::disj(std::move(pieces));
}

} // namespace gptest

#endif // GROTHPRES_TESTS_SUPPORT_HPP
