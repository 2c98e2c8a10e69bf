//===- semiring_test.cpp - Normal forms of classes ------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "support.hpp"

#include <gtest/gtest.h>

using namespace grothpres;

namespace {

Factor U(std::size_t i, std::size_t k) { return Factor::of(GroupElement::unit(k, i)); }
Factor N(long n, std::size_t k) { return Factor::of(GroupElement::integer(k, n)); }
Factor G(const char *s, std::size_t k) { return Factor::of(parse_group_element(s, k)); }
const Factor Inf = Factor::inf();

MonomialSum sum(std::size_t k, std::vector<std::pair<long, std::vector<Factor>>> terms) {
  MonomialSum s;
  s.k = k;
  for (auto &[c, fs] : terms)
    s.terms.push_back({Integer(c), fs});
  return s;
}

ClassNF cls(std::size_t k, std::vector<std::pair<long, std::vector<Factor>>> terms) {
  return canonicalize(sum(k, std::move(terms)));
}

Polynomial b(std::uint32_t i) { return Polynomial::variable(i - 1); }

ClassNF random_class(std::mt19937_64 &rng, std::size_t k, int inf_weight = 1) {
  return canonicalize(gptest::random_sum(rng, k, 3, 3, inf_weight));
}

} // namespace

TEST(Profile, Examples) {
  EXPECT_EQ(monomial_profile({Inf, U(1, 1), U(1, 1)}, 1), (Profile{3, 1}));
  EXPECT_EQ(monomial_profile({}, 2), (Profile{0, 0, 0}));
  EXPECT_EQ(monomial_profile({U(2, 2), U(1, 2)}, 2), (Profile{2, 1, 0}));
  EXPECT_EQ(monomial_profile({N(4, 1)}, 1), (Profile{0, 0}));
}

TEST(Profile, Additivity) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 500; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    auto s1 = gptest::random_sum(rng, k, 1), s2 = gptest::random_sum(rng, k, 1);
    auto f = s1.terms[0].factors, g = s2.terms[0].factors;
    auto fg = f;
    fg.insert(fg.end(), g.begin(), g.end());
    EXPECT_EQ(monomial_profile(fg, k), profile_add(monomial_profile(f, k), monomial_profile(g, k)));
  }
}

TEST(MDim, Order) {
  EXPECT_TRUE(mdim_leq({{2, 0}}, {{2, 1}}));
  EXPECT_TRUE(mdim_leq({}, {{1, 1}}));
  EXPECT_FALSE(mdim_leq({{3, 3, 1}, {5, 1, 1}}, {{4, 2, 1}}));
  EXPECT_EQ(maximal({{1, 0}, {2, 1}, {2, 1}, {0, 3}}), (MDim{{0, 3}, {2, 1}}));
}

TEST(Canonicalize, Examples) {
  ClassNF inf2 = cls(0, {{1, {Inf}}, {1, {Inf}}});
  EXPECT_EQ(inf2.mdim_u, (MDim{{1}}));
  EXPECT_TRUE(inf2.bounded.is_zero());
  EXPECT_EQ(inf2.to_string(), "inf");

  EXPECT_EQ(cls(0, {{5, {}}, {1, {Inf}}}), inf2);

  ClassNF c = cls(1, {{1, {Inf}}, {1, {U(1, 1), U(1, 1)}}});
  EXPECT_EQ(c.mdim_u, (MDim{{1, 1}}));
  EXPECT_EQ(c.bounded, b(1) * b(1));
  EXPECT_NE(c, cls(1, {{1, {Inf}}, {2, {U(1, 1), U(1, 1)}}}));
}

TEST(Canonicalize, InfiniteFactorSwallowsIntegers) {
  // inf * 3 = inf and inf * [1;5] = inf * [1;0].
  EXPECT_EQ(cls(0, {{1, {Inf, N(3, 0)}}}), cls(0, {{1, {Inf}}}));
  EXPECT_EQ(cls(1, {{1, {Inf, G("[1;5]", 1)}}}), cls(1, {{1, {Inf, U(1, 1)}}}));
}

TEST(ClassAdd, Examples) {
  std::mt19937_64 rng(1);
  ClassNF x = random_class(rng, 1);
  EXPECT_EQ(class_add(x, class_zero(1)), x);
  EXPECT_EQ(class_add(cls(0, {{1, {Inf}}}), cls(0, {{1, {Inf, Inf}}})),
            cls(0, {{1, {Inf, Inf}}}));
  ClassNF lhs = class_add(cls(1, {{1, {Inf}}, {1, {U(1, 1), U(1, 1)}}}),
                          class_of_profile({3, 1}));
  EXPECT_EQ(lhs.mdim_u, (MDim{{3, 1}}));
  EXPECT_TRUE(lhs.bounded.is_zero());
}

TEST(ClassMul, Examples) {
  EXPECT_EQ(class_mul(cls(0, {{1, {Inf}}}), cls(0, {{1, {Inf}}})).mdim_u, (MDim{{2}}));
  EXPECT_EQ(class_mul(cls(1, {{1, {Inf}}}), cls(1, {{1, {U(1, 1)}}})).mdim_u, (MDim{{2, 1}}));
  std::mt19937_64 rng(72);
  ClassNF x = random_class(rng, 2);
  EXPECT_EQ(class_mul(x, class_one(2)), x);
  EXPECT_EQ(class_mul(x, class_zero(2)), class_zero(2));
}

TEST(Eats, Examples) {
  ClassNF ia = cls(1, {{1, {Inf, U(1, 1)}}});
  ClassNF iy = cls(1, {{1, {Inf, G("[3;7]", 1)}}});
  EXPECT_TRUE(eats_rel(ia, iy));
  EXPECT_TRUE(eats_rel(iy, ia));
  EXPECT_EQ(ia, iy);
  EXPECT_FALSE(eats_rel(cls(0, {{5, {}}}), cls(0, {{3, {}}})));
  EXPECT_TRUE(eats_rel(cls(0, {{1, {Inf, Inf}}}), cls(0, {{1, {Inf}}})));
}

TEST(Eats, MatchesAbsorption) {
  std::mt19937_64 rng(73);
  int eaten = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    ClassNF a = random_class(rng, k, 2), c = random_class(rng, k);
    bool e = eats_rel(a, c);
    eaten += e;
    EXPECT_EQ(e, class_add(a, c) == a) << a.to_string() << " / " << c.to_string();
  }
  EXPECT_GT(eaten, 50);
}

TEST(Eats, DominatedFactorwise) {
  // inf * a2 ... an eats b1 ... bn whenever each b_i is below a multiple of a_i.
  std::mt19937_64 rng(74);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    int n = gptest::uniform(rng, 1, 4);
    std::vector<Factor> as{Inf}, bs;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      Factor aj = j == 0 ? Inf : Factor::of(gptest::random_positive(rng, k));
      Factor bj = gptest::uniform(rng, 0, 4) == 0 && aj.infinite
                      ? Inf
                      : Factor::of(gptest::random_positive(rng, k));
      if (j > 0)
        as.push_back(aj);
      if (!aj.infinite) {
        if (bj.infinite)
          ok = false;
        else {
          bool some = false;
          for (long m = 1; m <= 200 && !some; ++m)
            some = aj.value * Integer(m) >= bj.value;
          ok = some;
        }
      }
      bs.push_back(bj);
    }
    if (!ok)
      continue;
    ++checked;
    EXPECT_TRUE(eats_rel(canonicalize(sum(k, {{1, as}})), canonicalize(sum(k, {{1, bs}}))));
  }
  EXPECT_GT(checked, 200);
}

TEST(Laws, SemiringIdentities) {
  std::mt19937_64 rng(75);
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    ClassNF x = random_class(rng, k), y = random_class(rng, k), z = random_class(rng, k);
    EXPECT_EQ(class_add(class_add(x, y), z), class_add(x, class_add(y, z)));
    EXPECT_EQ(class_add(x, y), class_add(y, x));
    EXPECT_EQ(class_mul(class_mul(x, y), z), class_mul(x, class_mul(y, z)));
    EXPECT_EQ(class_mul(x, y), class_mul(y, x));
    EXPECT_EQ(class_mul(x, class_add(y, z)), class_add(class_mul(x, y), class_mul(x, z)));
    EXPECT_EQ(class_add(x, class_zero(k)), x);
    EXPECT_EQ(class_mul(x, class_one(k)), x);
  }
}

TEST(Laws, CanonicalizeIsAHomomorphism) {
  std::mt19937_64 rng(76);
  for (int i = 0; i < 300; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    MonomialSum s = gptest::random_sum(rng, k), t = gptest::random_sum(rng, k);
    MonomialSum st = s;
    st.terms.insert(st.terms.end(), t.terms.begin(), t.terms.end());
    EXPECT_EQ(canonicalize(st), class_add(canonicalize(s), canonicalize(t)));
    MonomialSum prod;
    prod.k = k;
    for (const auto &a : s.terms)
      for (const auto &c : t.terms) {
        MonoTerm m{a.coeff * c.coeff, a.factors};
        m.factors.insert(m.factors.end(), c.factors.begin(), c.factors.end());
        prod.terms.push_back(std::move(m));
      }
    EXPECT_EQ(canonicalize(prod), class_mul(canonicalize(s), canonicalize(t)));
  }
}

TEST(Laws, PurelyUnboundedIsIdempotent) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    MonomialSum s = gptest::random_sum(rng, k, 1);
    s.terms[0].coeff = 1;
    s.terms[0].factors.push_back(Inf);
    ClassNF a = canonicalize(s), acc = a;
    for (int n = 2; n <= 6; ++n) {
      acc = class_add(acc, a);
      EXPECT_EQ(acc, a);
    }
  }
}

TEST(Laws, SchroederBernstein) {
  std::mt19937_64 rng(78);
  int premises = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    ClassNF a = random_class(rng, k, 3), c = random_class(rng, k), d = random_class(rng, k);
    if (class_add(class_add(a, c), d) != a)
      continue;
    ++premises;
    EXPECT_EQ(class_add(a, c), a);
  }
  EXPECT_GT(premises, 50);
}

TEST(Laws, BoundedAdditiveCancellation) {
  std::mt19937_64 rng(79);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    ClassNF x = random_class(rng, k), y = random_class(rng, k, 0);
    ClassNF xp = gptest::uniform(rng, 0, 1) ? x : random_class(rng, k);
    ASSERT_TRUE(y.is_bounded());
    bool lhs = class_add(x, y) == class_add(xp, y);
    equal += lhs;
    EXPECT_EQ(lhs, x == xp);
  }
  EXPECT_GT(equal, 300);
}

TEST(Laws, BoundedMultiplicativeCancellation) {
  std::mt19937_64 rng(80);
  for (int i = 0; i < 500; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    ClassNF x = random_class(rng, k, 0), y = random_class(rng, k, 0);
    ClassNF xp = gptest::uniform(rng, 0, 1) ? x : random_class(rng, k, 0);
    if (y == class_zero(k))
      continue;
    EXPECT_EQ(class_mul(x, y) == class_mul(xp, y), x == xp);
  }
}

TEST(Laws, UnboundedMultiplicativeCancellationFails) {
  // inf * (1 + 1) = inf * 1 although 2 != 1.
  ClassNF inf = cls(0, {{1, {Inf}}});
  EXPECT_EQ(class_mul(inf, cls(0, {{2, {}}})), class_mul(inf, cls(0, {{1, {}}})));
}

TEST(FullMDim, RecoversMaximalProfiles) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 500; ++i) {
    std::size_t k = static_cast<std::size_t>(i % 3);
    MonomialSum s = gptest::random_sum(rng, k);
    std::vector<Profile> ps;
    for (const auto &t : s.terms)
      ps.push_back(monomial_profile(t.factors, k));
    EXPECT_EQ(full_mdim(canonicalize(s)), maximal(ps));
  }
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 300; ++i) {
    ClassNF x = random_class(rng, static_cast<std::size_t>(i % 4));
    EXPECT_EQ(ClassNF::from_json(x.to_json()), x) << x.to_json();
  }
  EXPECT_THROW(ClassNF::from_json("{\"k\":1,\"mdim\":[[1]],\"bounded\":[]}"),
               std::invalid_argument);
  EXPECT_THROW(ClassNF::from_json("not json"), std::invalid_argument);
}

TEST(Printing, Examples) {
  EXPECT_EQ(cls(0, {{1, {Inf, Inf}}}).to_string(), "inf^2");
  EXPECT_EQ(cls(1, {{1, {U(1, 1)}}}).to_string(), "b1");
  EXPECT_EQ(cls(1, {{1, {Inf, U(1, 1)}}}).to_string(), "inf*b1");
  EXPECT_EQ(class_zero(2).to_string(), "0");
}
