//===- cells_test.cpp - Cell decomposition --------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/cells.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace grothpres;

namespace {

GroupElement Z(long v) { return GroupElement::integer(0, v); }

ModelSpec k1a() {
  ModelSpec spec;
  spec.k = 1;
  spec.constants["a"] = parse_group_element("[1;0]", 1);
  return spec;
}

// Each point of [-B, B]^n lies in exactly as many cells as the formula says.
void expect_partition(const Formula &f, const std::vector<Cell> &cells,
                      const std::vector<std::string> &vars, std::int64_t B,
                      const ModelSpec &spec = {}) {
  oracle::Evaluator ef(f, vars, spec);
  std::vector<oracle::Evaluator> parts;
  for (const auto &c : cells)
    parts.emplace_back(to_formula(c.constraints()), vars, spec);
  oracle::Point p(vars.size(), -B);
  for (;;) {
    int hits = 0;
    for (const auto &e : parts)
      hits += e(p);
    ASSERT_EQ(hits, ef(p) ? 1 : 0) << print(f);
    std::size_t i = 0;
    while (i < p.size() && p[i] == B)
      p[i++] = -B;
    if (i == p.size())
      break;
    ++p[i];
  }
}

} // namespace

TEST(Decompose, SingleProgression) {
  Formula f = parse_formula("0 <= x & x < 10 & x % 3 = 1");
  auto cells = decompose(f, {});
  ASSERT_EQ(cells.size(), 1u);
  const Component &c = cells[0].comps[0];
  EXPECT_EQ(c.kind, Fiber::Interval);
  EXPECT_EQ(c.modulus, 3);
  EXPECT_EQ(c.residue, 1);
  std::vector<long> in;
  for (long x = -5; x <= 15; ++x)
    if (cell_contains(cells[0], {{"x", Z(x)}}, {}))
      in.push_back(x);
  EXPECT_EQ(in, (std::vector<long>{1, 4, 7}));
}

TEST(Decompose, WholeLine) {
  auto cells = decompose(Formula::truth(), {}, {"x"});
  ASSERT_EQ(cells.size(), 1u);
  const Component &c = cells[0].comps[0];
  EXPECT_EQ(c.kind, Fiber::Interval);
  EXPECT_FALSE(c.lower.has_value());
  EXPECT_FALSE(c.upper.has_value());
  EXPECT_EQ(c.modulus, 1);
}

TEST(Decompose, SymbolicBoundInstantiated) {
  ModelSpec spec = k1a();
  Formula f = parse_formula("0 <= x & x < y & y < a", {"a"});
  auto cells = decompose(f, spec, {"x", "y"});
  ASSERT_FALSE(cells.empty());
  for (const auto &c : cells)
    EXPECT_EQ(c.vars, (std::vector<std::string>{"x", "y"}));
  ModelSpec z;
  z.constants["a"] = Z(20);
  oracle::Evaluator ef(f, {"x", "y"}, z);
  std::vector<oracle::Evaluator> parts;
  for (const auto &c : cells)
    parts.emplace_back(to_formula(c.constraints()), std::vector<std::string>{"x", "y"}, z);
  for (std::int64_t x = 0; x <= 20; ++x)
    for (std::int64_t y = 0; y <= 20; ++y) {
      int hits = 0;
      for (const auto &e : parts)
        hits += e({x, y});
      EXPECT_EQ(hits, ef({x, y}) ? 1 : 0) << x << "," << y;
    }
}

TEST(Decompose, PartitionsRandomFormulas) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 80; ++i) {
    oracle::GenOptions o;
    o.nvars = 1 + static_cast<unsigned>(i % 2);
    o.quantifiers = static_cast<unsigned>(i % 3 == 0);
    Formula f = oracle::random_formula(rng, o);
    auto vars = oracle::gen_vars(o.nvars);
    auto cells = decompose(f, {}, vars);
    expect_partition(f, cells, vars, o.nvars == 1 ? 15 : 10);
  }
}

TEST(PiecewiseLinear, HalfOfX) {
  Formula g = parse_formula("x >= 0 & 2*t <= x & x < 2*t + 2");
  auto pieces = piecewise_linear(g, {"x"}, "t", {});
  EXPECT_EQ(pieces.size(), 2u);
  for (long x = 0; x <= 20; ++x) {
    int hits = 0;
    for (const auto &p : pieces) {
      Assignment at{{"x", Z(x)}};
      if (!cell_contains(p.domain, at, {}))
        continue;
      ++hits;
      auto d = floor_div(eval_term(p.value.num, at, {}), p.value.den);
      EXPECT_EQ(d.r, 0);
      EXPECT_EQ(d.q, Z(x / 2));
    }
    EXPECT_EQ(hits, 1) << x;
  }
}

TEST(PiecewiseLinear, Translation) {
  ModelSpec spec = k1a();
  auto pieces = piecewise_linear(parse_formula("t = x + a", {"a"}), {"x"}, "t", spec);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0].value.den, 1);
  EXPECT_EQ(pieces[0].value.num, LinearTerm::variable("x") + LinearTerm::constant("a"));
}

TEST(PiecewiseLinear, Minimum) {
  Formula g = parse_formula("(x <= y -> t = x) & (x > y -> t = y)");
  auto pieces = piecewise_linear(g, {"x", "y"}, "t", {});
  EXPECT_EQ(pieces.size(), 2u);
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y) {
      Assignment at{{"x", Z(x)}, {"y", Z(y)}};
      int hits = 0;
      for (const auto &p : pieces) {
        if (!cell_contains(p.domain, at, {}))
          continue;
        ++hits;
        auto d = floor_div(eval_term(p.value.num, at, {}), p.value.den);
        EXPECT_EQ(d.r, 0);
        EXPECT_EQ(d.q, Z(std::min(x, y)));
      }
      EXPECT_EQ(hits, 1);
    }
}

TEST(PiecewiseLinear, RejectsRelations) {
  EXPECT_THROW(piecewise_linear(parse_formula("t >= x"), {"x"}, "t", {}), NotAFunction);
}

TEST(IsBounded, Examples) {
  ModelSpec spec = k1a();
  auto w = is_bounded(parse_formula("0 <= x & x < a", {"a"}), spec);
  ASSERT_TRUE(w.has_value());
  EXPECT_GE(*w, spec.constants["a"]);
  EXPECT_FALSE(is_bounded(parse_formula("x >= 0"), {}).has_value());
  EXPECT_TRUE(is_bounded(parse_formula("E y. (x = 2*y & 0 <= y & y < a)", {"a"}), spec)
                  .has_value());
}

TEST(EnumerateFinite, Examples) {
  auto pts = enumerate_finite(parse_formula("0 <= x & x < 10 & x % 3 = 1"), {});
  std::vector<GroupElement> xs;
  for (const auto &p : pts)
    xs.push_back(p.at(0));
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(xs, (std::vector<GroupElement>{Z(1), Z(4), Z(7)}));

  ModelSpec spec = k1a();
  auto two = enumerate_finite(parse_formula("x = a | x = a + 1", {"a"}), spec);
  std::vector<GroupElement> ys;
  for (const auto &p : two)
    ys.push_back(p.at(0));
  std::sort(ys.begin(), ys.end());
  EXPECT_EQ(ys, (std::vector<GroupElement>{parse_group_element("[1;0]", 1),
                                           parse_group_element("[1;1]", 1)}));
  EXPECT_THROW(enumerate_finite(parse_formula("0 <= x & x < a", {"a"}), spec),
               InfiniteSet);
}

TEST(EnumerateFinite, AgreesWithBruteForce) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 60; ++i) {
    oracle::GenOptions o;
    o.nvars = 2;
    o.box = 6;
    o.quantifiers = static_cast<unsigned>(i % 2);
    Formula f = oracle::random_formula(rng, o);
    auto vars = oracle::gen_vars(2);
    auto pts = enumerate_finite(f, {}, vars);
    auto brute = oracle::enumerate_box(f, vars, 8);
    std::vector<oracle::Point> got;
    for (const auto &p : pts)
      got.push_back({p[0].int_coord().get_si(), p[1].int_coord().get_si()});
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(got, brute) << print(f);
  }
}
