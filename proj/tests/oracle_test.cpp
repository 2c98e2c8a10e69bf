//===- oracle_test.cpp - Brute-force evaluation over boxes ----------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace grothpres;
using namespace grothpres::oracle;

TEST(Enumerate, Examples) {
  auto pts = enumerate_box(parse_formula("x % 3 = 1 & 0 <= x & x < 10"), {"x"}, 20);
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts, (std::vector<Point>{{1}, {4}, {7}}));
  EXPECT_TRUE(enumerate_box(Formula::falsity(), {"x"}, 20).empty());
  EXPECT_EQ(enumerate_box(parse_formula("0 <= x & x <= 2 & 0 <= y & y <= 1"), {"x", "y"}, 5).size(),
            6u);
}

TEST(BruteCount, Examples) {
  EXPECT_EQ(brute_count(parse_formula("0 <= x & x < 7"), {"x"}, 20), 7u);
  EXPECT_EQ(brute_count(parse_formula("0 <= x1 & x1 < x2 & x2 < 5"), {"x1", "x2"}, 10), 10u);
  EXPECT_FALSE(brute_count(parse_formula("x >= 0"), {"x"}, 20).has_value());
}

TEST(Growth, Examples) {
  EXPECT_EQ(growth_exponent(parse_formula("x >= 0"), {"x"}), 1u);
  EXPECT_EQ(growth_exponent(parse_formula("0 <= x1 & x1 < x2"), {"x1", "x2"}), 2u);
  EXPECT_EQ(growth_exponent(parse_formula("0 <= x & x < 5"), {"x"}), 0u);
}

TEST(Growth, UnstableWhenNoWindowSettles) {
  // A set with only a handful of points per scale never shows a steady ratio.
  EXPECT_THROW(growth_exponent(parse_formula("x = 0 | x = 20 | x = 40 | x = 80 | x = 160"), {"x"},
                               {16, 32, 64, 128, 256}),
               Unstable);
}

TEST(Evaluator, QuantifiersUseLiteralRanges) {
  Evaluator ev(parse_formula("E y. (0 <= y & y <= 100 & x = 2*y)"), {"x"});
  EXPECT_TRUE(ev({200}));
  EXPECT_FALSE(ev({202}));
  EXPECT_FALSE(ev({7}));
  Evaluator all(parse_formula("A y. (0 <= y & y <= 3 -> x > y)"), {"x"});
  EXPECT_TRUE(all({4}));
  EXPECT_FALSE(all({3}));
  EXPECT_THROW(Evaluator(Formula::truth(), {"x"}, [] {
                 ModelSpec s;
                 s.k = 1;
                 return s;
               }()),
               std::invalid_argument);
}

TEST(Evaluator, ConstantsFromIntegerModel) {
  ModelSpec z;
  z.constants["c"] = GroupElement::integer(0, 12);
  Evaluator ev(parse_formula("0 <= x & x < c", {"c"}), {"x"}, z);
  EXPECT_EQ(count_box(ev, 30), 12u);
}

TEST(Parallel, MatchesSerial) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 40; ++i) {
    GenOptions o;
    o.nvars = 1 + static_cast<unsigned>(i % 3);
    o.quantifiers = static_cast<unsigned>(i % 2);
    Formula f = random_formula(rng, o);
    Evaluator ev(f, gen_vars(o.nvars));
    std::int64_t B = o.nvars == 3 ? 6 : 12;
    EXPECT_EQ(count_box(ev, B), count_box_serial(ev, B));
    auto a = enumerate_box(ev, B), b = enumerate_box_serial(ev, B);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Disagreement, FindsWitness) {
  auto d = disagreement(parse_formula("x < 5"), parse_formula("x <= 5"), {"x"}, 10);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (Point{5}));
  EXPECT_FALSE(disagreement(parse_formula("x < 5"), parse_formula("x <= 4"), {"x"}, 10));
}

TEST(Generator, RespectsOptions) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 50; ++i) {
    GenOptions o;
    o.nvars = 2;
    o.box = 4;
    o.params = 1;
    Formula f = random_formula(rng, o);
    for (const auto &v : free_vars(f))
      EXPECT_TRUE(v == "x1" || v == "x2" || v == "y1") << v;
    Formula g = gptest::bind_params(f, {"y1"}, {3});
    // Parameter bounds take over from the box: x <= 2*y1 + 2 = 8.
    EXPECT_TRUE(brute_count(g, gen_vars(2), 9).has_value());
  }
}
