//===- polynomial.hpp - Sparse multivariate rational polynomials -*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_POLYNOMIAL_HPP
#define GROTHPRES_POLYNOMIAL_HPP

#include "grothpres/syntax.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grothpres {

/// Power product: (variable, exponent) pairs sorted by variable, exponents
/// positive.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t exponent_of(const Monomial &m, std::uint32_t var);
std::uint32_t total_degree(const Monomial &m);
Monomial monomial_mul(const Monomial &a, const Monomial &b);

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational &c);
  Polynomial(const Integer &c) : Polynomial(Rational(c)) {}
  Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial variable(std::uint32_t v);
  static Polynomial monomial(Monomial m, Rational c = 1);

  const std::map<Monomial, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial &m) const;

  std::uint32_t degree_in(std::uint32_t v) const;
  /// Coefficient of v^e as a polynomial in the remaining variables.
  Polynomial coefficient_in(std::uint32_t v, std::uint32_t e) const;
  bool mentions(std::uint32_t v) const { return degree_in(v) > 0; }

  Polynomial substitute(std::uint32_t v, const Polynomial &value) const;
  /// Renames variables through `f`.
  Polynomial rename(const std::function<std::uint32_t(std::uint32_t)> &f) const;
  Rational evaluate(const std::map<std::uint32_t, Rational> &at) const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) {
    return !(a == b);
  }

  /// Human-readable form, highest total degree first.
  std::string to_string(
      const std::function<std::string(std::uint32_t)> &name) const;

private:
  void add_term(const Monomial &m, const Rational &c);

  std::map<Monomial, Rational> terms_;
};

/// Bernoulli numbers B_0..B_n with B_1 = +1/2.
std::vector<Rational> bernoulli_plus(unsigned n);

/// Sum over t = 0..T of t^p, as a polynomial in variable `T`.
Polynomial faulhaber(unsigned p, std::uint32_t T);

/// Sum of g over t = lo..hi (empty when hi < lo is the caller's business:
/// the closed form is only meaningful for hi >= lo - 1).
Polynomial sum_over(const Polynomial &g, std::uint32_t t, const Polynomial &lo,
                    const Polynomial &hi);

} // namespace grothpres

#endif // GROTHPRES_POLYNOMIAL_HPP
