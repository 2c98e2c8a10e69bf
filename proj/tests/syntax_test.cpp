//===- syntax_test.cpp - Parser, printer and normalizer tests -------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace grothpres;

namespace {

LinearTerm random_term(std::mt19937_64 &rng, const std::vector<std::string> &vars) {
  LinearTerm t(Integer(gptest::uniform(rng, -9, 9)));
  int n = gptest::uniform(rng, 0, 2);
  for (int i = 0; i < n; ++i) {
    const auto &v = vars[static_cast<std::size_t>(gptest::uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
    t += LinearTerm::variable(v, Integer(gptest::uniform(rng, -5, 5)));
  }
  if (gptest::uniform(rng, 0, 3) == 0)
    t += LinearTerm::constant(gptest::uniform(rng, 0, 1) ? "a" : "b",
                              Integer(gptest::uniform(rng, -3, 3)));
  return t;
}

Formula random_ast(std::mt19937_64 &rng, std::vector<std::string> vars, int depth) {
  int pick = gptest::uniform(rng, 0, depth <= 0 ? 3 : 10);
  switch (pick) {
  case 0:
    return gptest::uniform(rng, 0, 1) ? Formula::truth() : Formula::falsity();
  case 1: {
    int m = gptest::uniform(rng, 2, 6);
    return Formula::cong(Integer(m), random_term(rng, vars),
                         Integer(gptest::uniform(rng, 0, m - 1)));
  }
  case 2:
  case 3: {
    static constexpr Cmp cmps[] = {Cmp::Lt, Cmp::Le, Cmp::Eq, Cmp::Ne, Cmp::Ge, Cmp::Gt};
    return Formula::atom(cmps[gptest::uniform(rng, 0, 5)], random_term(rng, vars),
                         random_term(rng, vars));
  }
  case 4:
    return Formula::negation(random_ast(rng, vars, depth - 1));
  case 5:
  case 6: {
    std::vector<Formula> args;
    int n = gptest::uniform(rng, 2, 3);
    for (int i = 0; i < n; ++i)
      args.push_back(random_ast(rng, vars, depth - 1));
    return pick == 5 ? Formula::conj(std::move(args)) : Formula::disj(std::move(args));
  }
  case 7:
    return Formula::implies(random_ast(rng, vars, depth - 1),
                            random_ast(rng, vars, depth - 1));
  default: {
    std::string v = "v" + std::to_string(gptest::uniform(rng, 1, 3));
    vars.push_back(v);
    Formula body = random_ast(rng, vars, depth - 1);
    return pick == 8 ? Formula::forall(v, body) : Formula::exists(v, body);
  }
  }
}

} // namespace

TEST(Parse, ExistsEquation) {
  Formula f = parse_formula("E y. x = 2*y");
  const auto *e = f.as<Formula::Exists>();
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->var, "y");
  const auto *a = e->body.as<Formula::Atom>();
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->cmp, Cmp::Eq);
  EXPECT_EQ(a->lhs, LinearTerm::variable("x"));
  EXPECT_EQ(a->rhs, LinearTerm::variable("y", Integer(2)));
}

TEST(Parse, ConstantsVersusVariables) {
  Formula f = parse_formula("0 <= x & x < a", {"a"});
  const auto *c = f.as<Formula::And>();
  ASSERT_NE(c, nullptr);
  ASSERT_EQ(c->args.size(), 2u);
  const auto *second = c->args[1].as<Formula::Atom>();
  ASSERT_NE(second, nullptr);
  EXPECT_EQ(second->cmp, Cmp::Lt);
  EXPECT_EQ(second->rhs, LinearTerm::constant("a"));
  // Undeclared names are plain variables.
  Formula g = parse_formula("x < a");
  EXPECT_EQ(g.as<Formula::Atom>()->rhs, LinearTerm::variable("a"));
}

TEST(Parse, Congruence) {
  Formula f = parse_formula("x % 3 = 1");
  const auto *c = f.as<Formula::Cong>();
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->modulus, 3);
  EXPECT_EQ(c->residue, 1);
  EXPECT_EQ(c->term, LinearTerm::variable("x"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula("x <"), ParseError);
  EXPECT_THROW(parse_formula("x % 1 = 0"), ParseError);
  EXPECT_THROW(parse_formula("x % 3 = 3"), ParseError);
  EXPECT_THROW(parse_formula("x * y = 1"), ParseError);
  try {
    parse_formula("x = = 1");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_GT(e.position, 0u);
  }
}

TEST(Parse, Precedence) {
  Formula f = parse_formula("p = 0 | q = 0 & r = 0 -> s = 0");
  const auto *imp = f.as<Formula::Implies>();
  ASSERT_NE(imp, nullptr);
  const auto *d = imp->lhs.as<Formula::Or>();
  ASSERT_NE(d, nullptr);
  EXPECT_TRUE(d->args[1].is<Formula::And>());
}

TEST(Print, RoundTripRandomAsts) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_ast(rng, {"x", "y", "z"}, 4);
    std::string text = print(f);
    Formula g = parse_formula(text, {"a", "b"});
    ASSERT_EQ(f, g) << text << "\n reprinted " << print(g);
  }
}

TEST(Normalize, NegatedStrictOrder) {
  Formula n = normalize(parse_formula("!(x < y)"));
  EXPECT_EQ(print(n), print(parse_formula("y - x <= 0")));
}

TEST(Normalize, Disequality) {
  Formula n = normalize(parse_formula("x != y"));
  EXPECT_EQ(print(n), print(parse_formula("x - y + 1 <= 0 | -x + y + 1 <= 0")));
}

TEST(Normalize, ForallBecomesNegatedExists) {
  Formula n = normalize(parse_formula("A y. y < x"));
  const auto *neg = n.as<Formula::Not>();
  ASSERT_NE(neg, nullptr);
  EXPECT_TRUE(neg->body.is<Formula::Exists>());
}

TEST(Normalize, RenamesBoundVariablesApart) {
  Formula n = normalize(parse_formula("(E y. x = 2*y) & (E y. x = 3*y) & y = 1"));
  std::set<std::string> bound;
  std::function<void(const Formula &)> walk = [&](const Formula &f) {
    std::visit(
        [&](const auto &x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Formula::Exists> ||
                        std::is_same_v<T, Formula::Forall>) {
            EXPECT_TRUE(bound.insert(x.var).second) << x.var;
            EXPECT_NE(x.var, "y");
            EXPECT_NE(x.var, "x");
            walk(x.body);
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            walk(x.body);
          } else if constexpr (std::is_same_v<T, Formula::And> ||
                               std::is_same_v<T, Formula::Or>) {
            for (const auto &a : x.args)
              walk(a);
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            walk(x.lhs);
            walk(x.rhs);
          }
        },
        f.node());
  };
  walk(n);
  EXPECT_EQ(bound.size(), 2u);
  EXPECT_EQ(free_vars(n), (std::set<std::string>{"x", "y"}));
}

TEST(Normalize, PreservesSolutionsOnBox) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    oracle::GenOptions o;
    o.nvars = 1 + static_cast<unsigned>(i % 2);
    o.atoms = 2 + static_cast<unsigned>(i % 3);
    Formula f = oracle::random_formula(rng, o);
    auto vars = oracle::gen_vars(o.nvars);
    auto d = oracle::disagreement(f, normalize(f), vars, 20);
    EXPECT_FALSE(d.has_value()) << print(f);
  }
}

TEST(FreeVars, OrderOfFirstOccurrence) {
  Formula f = parse_formula("y < x & (E z. z = y + w) & c = 1", {"c"});
  EXPECT_EQ(free_vars_ordered(f), (std::vector<std::string>{"y", "x", "w"}));
  EXPECT_EQ(constants_of(f), (std::set<std::string>{"c"}));
  EXPECT_FALSE(is_quantifier_free(f));
}
