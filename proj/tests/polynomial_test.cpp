//===- polynomial_test.cpp - Exact multivariate polynomials ---------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace grothpres;

namespace {

Polynomial X(std::uint32_t v) { return Polynomial::variable(v); }
Polynomial C(long c) { return Polynomial(c); }
Rational Q(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

std::string name(std::uint32_t v) { return "y" + std::to_string(v); }

} // namespace

TEST(Polynomial, ArithmeticAndZero) {
  Polynomial p = (X(0) + C(1)) * (X(0) - C(1));
  EXPECT_EQ(p, X(0) * X(0) - C(1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.degree_in(0), 2u);
  EXPECT_EQ(p.coefficient_in(0, 0), C(-1));
  EXPECT_EQ(p.coefficient_in(0, 2), C(1));
  EXPECT_FALSE(p.mentions(1));
  EXPECT_EQ(X(1).pow(3), X(1) * X(1) * X(1));
}

TEST(Polynomial, SubstituteAndEvaluate) {
  Polynomial p = X(0) * X(0) * Polynomial(Q(1, 2)) + X(1);
  Polynomial s = p.substitute(0, X(1) + C(2));
  EXPECT_EQ(s.evaluate({{1, Q(3)}}), Q(25, 2) + Q(3));
  EXPECT_EQ(p.evaluate({{0, Q(4)}, {1, Q(-1)}}), Q(7));
  Polynomial r = p.rename([](std::uint32_t v) { return v + 5; });
  EXPECT_TRUE(r.mentions(5));
  EXPECT_FALSE(r.mentions(0));
}

TEST(Polynomial, Printing) {
  EXPECT_EQ((X(0) * X(0) - X(0)).to_string(name), "y0^2 - y0");
  EXPECT_EQ((Polynomial(Q(3, 2)) * X(1)).to_string(name), "3/2*y1");
  EXPECT_EQ(Polynomial().to_string(name), "0");
}

TEST(Faulhaber, MatchesDirectSums) {
  for (unsigned p = 0; p <= 6; ++p) {
    Polynomial F = faulhaber(p, 0);
    for (long T = 0; T <= 12; ++T) {
      Integer direct = 0;
      for (long t = 0; t <= T; ++t) {
        Integer pw = 1;
        for (unsigned e = 0; e < p; ++e)
          pw *= t;
        direct += pw;
      }
      EXPECT_EQ(F.evaluate({{0, Q(T)}}), Rational(direct)) << "p=" << p << " T=" << T;
    }
  }
}

TEST(SumOver, SymbolicBounds) {
  // sum_{t=lo}^{hi} t over lo = 1, hi = y counts y(y+1)/2.
  Polynomial g = X(1);
  Polynomial s = sum_over(g, 1, C(1), X(0));
  for (long y = 0; y <= 10; ++y)
    EXPECT_EQ(s.evaluate({{0, Q(y)}}), Q(y * (y + 1) / 2));
  // Random polynomial weights against direct summation.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    Polynomial w;
    for (int e = 0; e <= 3; ++e)
      w += Polynomial(Q(static_cast<long>(rng() % 7) - 3)) * X(1).pow(static_cast<unsigned>(e)) *
           (e % 2 ? X(0) : C(1));
    Polynomial lo = X(0) - C(2), hi = X(0) * C(2) + C(1);
    Polynomial s2 = sum_over(w, 1, lo, hi);
    for (long y = 0; y <= 6; ++y) {
      Rational direct = 0;
      for (long t = y - 2; t <= 2 * y + 1; ++t)
        direct += w.evaluate({{0, Q(y)}, {1, Q(t)}});
      EXPECT_EQ(s2.evaluate({{0, Q(y)}}), direct);
    }
  }
}

TEST(Bernoulli, FirstValues) {
  auto B = bernoulli_plus(4);
  EXPECT_EQ(B[0], Q(1));
  EXPECT_EQ(B[1], Q(1, 2));
  EXPECT_EQ(B[2], Q(1, 6));
  EXPECT_EQ(B[3], Q(0));
  EXPECT_EQ(B[4], Q(-1, 30));
}
