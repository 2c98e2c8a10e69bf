//===- oracle.cpp - Brute-force ground truth over the integers ------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace grothpres::oracle {

struct Evaluator::Node {
  enum Kind { True, False, Lin, Cong, Not, And, Or, Exists, Forall };
  Kind kind = True;
  Cmp cmp = Cmp::Eq;
  std::vector<std::pair<std::size_t, std::int64_t>> coeffs;
  std::int64_t lit = 0, mod = 1;
  std::vector<Node> kids;
  std::size_t slot = 0;
  std::int64_t lo = 0, hi = 0;
};

namespace {

using Node = Evaluator::Node;
using Env = std::map<std::string, std::size_t>;

std::int64_t to_i64(const Integer &z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("value out of machine range");
  return z.get_si();
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

struct Compiler {
  const ModelSpec &spec;
  std::int64_t witness;
  std::size_t next_slot;

  // Linear form with constants inlined.
  void linear(const LinearTerm &t, const Env &env, Node &n) {
    n.lit = to_i64(t.literal());
    for (const auto &[v, c] : t.vars()) {
      auto it = env.find(v);
      if (it == env.end())
        throw std::invalid_argument("unlisted free variable '" + v + "'");
      n.coeffs.emplace_back(it->second, to_i64(c));
    }
    for (const auto &[name, c] : t.consts()) {
      auto it = spec.constants.find(name);
      if (it == spec.constants.end())
        throw std::invalid_argument("unknown constant '" + name + "'");
      n.lit += to_i64(c) * to_i64(it->second.int_coord());
    }
  }

  // Tightens [lo, hi] from a conjunct of the shape c*z + L cmp 0.
  void bound_from(const Formula &f, const std::string &z, std::int64_t &lo, std::int64_t &hi) {
    const auto *a = f.as<Formula::Atom>();
    if (!a || a->cmp == Cmp::Ne)
      return;
    LinearTerm t = a->lhs - a->rhs;
    if (t.vars().size() != 1 || !t.vars().count(z))
      return;
    Node n;
    Env one{{z, 0}};
    linear(t, one, n);
    std::int64_t c = n.coeffs[0].second, L = n.lit;
    // c*z + L <= 0; for c < 0 this is z >= ceil(L/|c|)
    auto le_fixed = [&](std::int64_t c, std::int64_t L) {
      if (c > 0)
        hi = std::min(hi, floor_div64(-L, c));
      else
        lo = std::max(lo, -floor_div64(-L, -c));
    };
    switch (a->cmp) {
    case Cmp::Le:
      le_fixed(c, L);
      break;
    case Cmp::Lt:
      le_fixed(c, L + 1);
      break;
    case Cmp::Ge:
      le_fixed(-c, -L);
      break;
    case Cmp::Gt:
      le_fixed(-c, -L + 1);
      break;
    case Cmp::Eq:
      le_fixed(c, L);
      le_fixed(-c, -L);
      break;
    case Cmp::Ne:
      break;
    }
  }

  void bounds(const Formula &guard, const std::string &z, std::int64_t &lo, std::int64_t &hi) {
    if (const auto *a = guard.as<Formula::And>())
      for (const auto &g : a->args)
        bound_from(g, z, lo, hi);
    else
      bound_from(guard, z, lo, hi);
  }

  Node compile(const Formula &f, Env &env) {
    Node n;
    std::visit(
        [&](const auto &x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Formula::True>) {
            n.kind = Node::True;
          } else if constexpr (std::is_same_v<T, Formula::False>) {
            n.kind = Node::False;
          } else if constexpr (std::is_same_v<T, Formula::Atom>) {
            n.kind = Node::Lin;
            n.cmp = x.cmp;
            linear(x.lhs - x.rhs, env, n);
          } else if constexpr (std::is_same_v<T, Formula::Cong>) {
            n.kind = Node::Cong;
            n.mod = to_i64(x.modulus);
            linear(x.term - LinearTerm(x.residue), env, n);
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            n.kind = Node::Not;
            n.kids.push_back(compile(x.body, env));
          } else if constexpr (std::is_same_v<T, Formula::And> ||
                               std::is_same_v<T, Formula::Or>) {
            n.kind = std::is_same_v<T, Formula::And> ? Node::And : Node::Or;
            for (const auto &g : x.args)
              n.kids.push_back(compile(g, env));
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            n.kind = Node::Or;
            Node neg;
            neg.kind = Node::Not;
            neg.kids.push_back(compile(x.lhs, env));
            n.kids.push_back(std::move(neg));
            n.kids.push_back(compile(x.rhs, env));
          } else {
            n.kind = std::is_same_v<T, Formula::Exists> ? Node::Exists : Node::Forall;
            n.slot = next_slot++;
            n.lo = -witness;
            n.hi = witness;
            constexpr std::int64_t big = std::numeric_limits<std::int64_t>::max() / 4;
            std::int64_t lo = -big, hi = big;
            if constexpr (std::is_same_v<T, Formula::Exists>)
              bounds(x.body, x.var, lo, hi);
            else if (const auto *imp = x.body.template as<Formula::Implies>())
              bounds(imp->lhs, x.var, lo, hi);
            if (lo != -big)
              n.lo = lo;
            if (hi != big)
              n.hi = hi;
            std::optional<std::size_t> saved;
            if (auto it = env.find(x.var); it != env.end())
              saved = it->second;
            env[x.var] = n.slot;
            n.kids.push_back(compile(x.body, env));
            if (saved)
              env[x.var] = *saved;
            else
              env.erase(x.var);
          }
        },
        f.node());
    return n;
  }
};

bool eval(const Node &n, std::int64_t *env) {
  switch (n.kind) {
  case Node::True:
    return true;
  case Node::False:
    return false;
  case Node::Lin: {
    std::int64_t v = n.lit;
    for (const auto &[s, c] : n.coeffs)
      v += c * env[s];
    switch (n.cmp) {
    case Cmp::Lt:
      return v < 0;
    case Cmp::Le:
      return v <= 0;
    case Cmp::Eq:
      return v == 0;
    case Cmp::Ne:
      return v != 0;
    case Cmp::Ge:
      return v >= 0;
    case Cmp::Gt:
      return v > 0;
    }
    return false;
  }
  case Node::Cong: {
    std::int64_t v = n.lit;
    for (const auto &[s, c] : n.coeffs)
      v += c * env[s];
    return v % n.mod == 0;
  }
  case Node::Not:
    return !eval(n.kids[0], env);
  case Node::And:
    for (const auto &k : n.kids)
      if (!eval(k, env))
        return false;
    return true;
  case Node::Or:
    for (const auto &k : n.kids)
      if (eval(k, env))
        return true;
    return false;
  case Node::Exists:
    for (std::int64_t z = n.lo; z <= n.hi; ++z) {
      env[n.slot] = z;
      if (eval(n.kids[0], env))
        return true;
    }
    return false;
  case Node::Forall:
    for (std::int64_t z = n.lo; z <= n.hi; ++z) {
      env[n.slot] = z;
      if (!eval(n.kids[0], env))
        return false;
    }
    return true;
  }
  return false;
}

constexpr std::size_t kMaxSlots = 32;

} // namespace

Evaluator::Evaluator(const Formula &f, const std::vector<std::string> &vars,
                     const ModelSpec &spec, std::int64_t witness)
    : arity_(vars.size()) {
  if (spec.k != 0)
    throw std::invalid_argument("the oracle only evaluates over the integers");
  Env env;
  for (std::size_t i = 0; i < vars.size(); ++i)
    env[vars[i]] = i;
  Compiler c{spec, witness, vars.size()};
  root_ = std::make_shared<Node>(c.compile(f, env));
  slots_ = c.next_slot;
  if (slots_ > kMaxSlots)
    throw std::invalid_argument("too many variables for the oracle");
}

bool Evaluator::operator()(const std::int64_t *point) const {
  std::int64_t env[kMaxSlots];
  std::copy(point, point + arity_, env);
  return eval(*root_, env);
}

namespace {

// Visits [-B, B]^n with the first coordinate fixed to `first`.
template <class F>
void sweep_slice(std::size_t n, std::int64_t B, std::int64_t first, F &&visit) {
  Point p(n, -B);
  p[0] = first;
  if (n == 1) {
    visit(p);
    return;
  }
  while (true) {
    visit(p);
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (p[i] < B) {
        ++p[i];
        break;
      }
      p[i] = -B;
      if (i == 1)
        return;
    }
  }
}

} // namespace

std::vector<Point> enumerate_box_serial(const Evaluator &ev, std::int64_t B) {
  std::vector<Point> out;
  const std::size_t n = ev.arity();
  if (n == 0) {
    if (ev(Point{}))
      out.emplace_back();
    return out;
  }
  for (std::int64_t x = -B; x <= B; ++x)
    sweep_slice(n, B, x, [&](const Point &p) {
      if (ev(p))
        out.push_back(p);
    });
  return out;
}

std::vector<Point> enumerate_box(const Evaluator &ev, std::int64_t B) {
  const std::size_t n = ev.arity();
  if (n == 0)
    return enumerate_box_serial(ev, B);
  std::vector<std::vector<Point>> slices(static_cast<std::size_t>(2 * B + 1));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t x = -B; x <= B; ++x)
    sweep_slice(n, B, x, [&](const Point &p) {
      if (ev(p))
        slices[static_cast<std::size_t>(x + B)].push_back(p);
    });
  std::vector<Point> out;
  for (auto &s : slices)
    out.insert(out.end(), std::make_move_iterator(s.begin()),
               std::make_move_iterator(s.end()));
  return out;
}

std::vector<Point> enumerate_box(const Formula &f,
                                 const std::vector<std::string> &vars,
                                 std::int64_t B, const ModelSpec &spec) {
  return enumerate_box(Evaluator(f, vars, spec), B);
}

std::uint64_t count_box_serial(const Evaluator &ev, std::int64_t B) {
  const std::size_t n = ev.arity();
  if (n == 0)
    return ev(Point{}) ? 1 : 0;
  std::uint64_t total = 0;
  for (std::int64_t x = -B; x <= B; ++x)
    sweep_slice(n, B, x, [&](const Point &p) { total += ev(p); });
  return total;
}

std::uint64_t count_box(const Evaluator &ev, std::int64_t B) {
  const std::size_t n = ev.arity();
  if (n == 0)
    return count_box_serial(ev, B);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t x = -B; x <= B; ++x) {
    std::uint64_t local = 0;
    sweep_slice(n, B, x, [&](const Point &p) { local += ev(p); });
    total += local;
  }
  return total;
}

std::optional<std::uint64_t> brute_count(const Formula &f,
                                         const std::vector<std::string> &vars,
                                         std::int64_t B, const ModelSpec &spec) {
  Evaluator ev(f, vars, spec);
  std::uint64_t small = count_box(ev, B);
  if (count_box(ev, 2 * B) != small)
    return std::nullopt;
  return small;
}

unsigned growth_exponent(const Formula &f, const std::vector<std::string> &vars,
                         std::vector<std::int64_t> Ms, const ModelSpec &spec) {
  Evaluator ev(f, vars, spec);
  // Counts are taken lazily so long doubling chains only cost what they use.
  std::vector<double> counts, ratios;
  for (auto M : Ms) {
    counts.push_back(static_cast<double>(count_box(ev, M)));
    if (counts[0] == 0)
      throw Unstable("empty at the smallest box");
    if (counts.size() < 2)
      continue;
    ratios.push_back(std::log2(counts.back() / counts[counts.size() - 2]));
    if (ratios.size() < 3)
      continue;
    double d = std::round(ratios.back());
    bool stable = d >= 0;
    for (std::size_t j = ratios.size() - 3; j < ratios.size() && stable; ++j)
      stable = std::fabs(ratios[j] - d) <= 0.15;
    if (stable)
      return static_cast<unsigned>(d);
  }
  throw Unstable("growth exponent did not stabilize");
}

std::optional<Point> disagreement(const Formula &f, const Formula &g,
                                  const std::vector<std::string> &vars,
                                  std::int64_t B, const ModelSpec &spec) {
  Evaluator ef(f, vars, spec), eg(g, vars, spec);
  const std::size_t n = vars.size();
  if (n == 0)
    return ef(Point{}) == eg(Point{}) ? std::nullopt : std::optional<Point>(Point{});
  std::optional<Point> found;
  for (std::int64_t x = -B; x <= B && !found; ++x)
    sweep_slice(n, B, x, [&](const Point &p) {
      if (!found && ef(p) != eg(p))
        found = p;
    });
  return found;
}

std::vector<std::string> gen_vars(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i)
    out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> gen_params(unsigned p) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= p; ++i)
    out.push_back("y" + std::to_string(i));
  return out;
}

namespace {

struct Generator {
  std::mt19937_64 &rng;
  const GenOptions &opt;
  unsigned next_z = 1;

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  Formula atom(const std::vector<std::string> &scope,
               const std::string &must) {
    LinearTerm t;
    std::vector<std::string> pick;
    if (!must.empty())
      pick.push_back(must);
    unsigned extra = static_cast<unsigned>(uniform(must.empty() ? 1 : 0, 1));
    for (unsigned i = 0; i < extra; ++i)
      pick.push_back(scope[static_cast<std::size_t>(uniform(0, static_cast<int>(scope.size()) - 1))]);
    for (const auto &v : pick) {
      int c = 0;
      while (c == 0)
        c = uniform(-opt.max_coeff, opt.max_coeff);
      t += LinearTerm::variable(v, Integer(c));
    }
    if (opt.congruences && uniform(0, 4) == 0) {
      int m = uniform(2, 5);
      return Formula::cong(Integer(m), t, Integer(uniform(0, m - 1)));
    }
    static constexpr Cmp cmps[] = {Cmp::Lt, Cmp::Le, Cmp::Eq, Cmp::Ne, Cmp::Ge, Cmp::Gt};
    Cmp c = cmps[uniform(0, 5)];
    return Formula::atom(c, t, LinearTerm(Integer(uniform(-opt.max_coeff, opt.max_coeff))));
  }

  Formula combine(std::vector<Formula> parts) {
    while (parts.size() > 1) {
      std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(parts.size()) - 2));
      Formula a = parts[i], b = parts[i + 1];
      Formula c = uniform(0, 1) ? Formula::conj({a, b}) : Formula::disj({a, b});
      if (uniform(0, 5) == 0)
        c = Formula::negation(c);
      parts.erase(parts.begin() + static_cast<long>(i) + 1);
      parts[i] = c;
    }
    return parts[0];
  }

  Formula gen(std::vector<std::string> scope, unsigned quants, unsigned atoms) {
    std::vector<Formula> parts;
    if (quants > 0) {
      std::string z = "z" + std::to_string(next_z++);
      scope.push_back(z);
      Formula inner = gen(scope, quants - 1, std::max(1u, atoms - 1));
      inner = combine({inner, atom(scope, z)});
      LinearTerm zt = LinearTerm::variable(z);
      Formula range = Formula::conj(
          {Formula::atom(Cmp::Ge, zt, LinearTerm(Integer(-opt.qbound))),
           Formula::atom(Cmp::Le, zt, LinearTerm(Integer(opt.qbound)))});
      scope.pop_back();
      parts.push_back(uniform(0, 1)
                          ? Formula::exists(z, Formula::conj({range, inner}))
                          : Formula::forall(z, Formula::implies(range, inner)));
      if (atoms > 1)
        parts.push_back(atom(scope, ""));
    } else {
      for (unsigned i = 0; i < std::max(1u, atoms); ++i)
        parts.push_back(atom(scope, ""));
    }
    return combine(std::move(parts));
  }
};

} // namespace

Formula random_formula(std::mt19937_64 &rng, const GenOptions &opt) {
  Generator g{rng, opt};
  auto vars = gen_vars(opt.nvars);
  auto params = gen_params(opt.params);
  std::vector<std::string> scope = vars;
  scope.insert(scope.end(), params.begin(), params.end());
  Formula body = g.gen(scope, opt.quantifiers, opt.atoms);
  if (opt.box <= 0 && params.empty())
    return body;
  std::vector<Formula> parts;
  for (const auto &v : vars) {
    LinearTerm x = LinearTerm::variable(v);
    if (!params.empty()) {
      const auto &y = params[static_cast<std::size_t>(g.uniform(0, static_cast<int>(params.size()) - 1))];
      LinearTerm top = LinearTerm::variable(y, Integer(g.uniform(1, 2))) +
                       LinearTerm(Integer(g.uniform(-2, 2)));
      parts.push_back(Formula::atom(Cmp::Ge, x, LinearTerm(Integer(-2))));
      parts.push_back(Formula::atom(Cmp::Le, x, top));
      continue;
    }
    parts.push_back(Formula::atom(Cmp::Ge, x, LinearTerm(Integer(-opt.box))));
    parts.push_back(Formula::atom(Cmp::Le, x, LinearTerm(Integer(opt.box))));
  }
  parts.push_back(body);
  return Formula::conj(std::move(parts));
}

} // namespace grothpres::oracle
