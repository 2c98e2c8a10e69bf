//===- syntax.cpp - Formula AST, parser, printer, normalizer --------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace grothpres {

//===----------------------------------------------------------------------===//
// LinearTerm
//===----------------------------------------------------------------------===//

namespace {

void add_coeff(std::map<std::string, Integer> &m, const std::string &k,
               const Integer &c) {
  if (c == 0)
    return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0)
    m.erase(it);
}

int compare_maps(const std::map<std::string, Integer> &a,
                 const std::map<std::string, Integer> &b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (int c = ia->first.compare(ib->first))
      return c < 0 ? -1 : 1;
    if (int c = cmp(ia->second, ib->second))
      return c < 0 ? -1 : 1;
  }
  if (ia == a.end() && ib == b.end())
    return 0;
  return ia == a.end() ? -1 : 1;
}

} // namespace

LinearTerm LinearTerm::variable(const std::string &name, Integer coeff) {
  LinearTerm t;
  add_coeff(t.vars_, name, coeff);
  return t;
}

LinearTerm LinearTerm::constant(const std::string &name, Integer coeff) {
  LinearTerm t;
  add_coeff(t.consts_, name, coeff);
  return t;
}

Integer LinearTerm::var_coeff(const std::string &name) const {
  auto it = vars_.find(name);
  return it == vars_.end() ? Integer(0) : it->second;
}

Integer LinearTerm::const_coeff(const std::string &name) const {
  auto it = consts_.find(name);
  return it == consts_.end() ? Integer(0) : it->second;
}

void LinearTerm::set_var_coeff(const std::string &name, const Integer &c) {
  if (c == 0)
    vars_.erase(name);
  else
    vars_[name] = c;
}

void LinearTerm::set_const_coeff(const std::string &name, const Integer &c) {
  if (c == 0)
    consts_.erase(name);
  else
    consts_[name] = c;
}

LinearTerm LinearTerm::linear_part() const {
  LinearTerm t = *this;
  t.literal_ = 0;
  return t;
}

LinearTerm LinearTerm::substitute(const std::string &name,
                                  const LinearTerm &value) const {
  auto it = vars_.find(name);
  if (it == vars_.end())
    return *this;
  Integer c = it->second;
  LinearTerm t = *this;
  t.vars_.erase(name);
  t += value * c;
  return t;
}

LinearTerm LinearTerm::var_to_const(const std::string &name) const {
  auto it = vars_.find(name);
  if (it == vars_.end())
    return *this;
  LinearTerm t = *this;
  Integer c = it->second;
  t.vars_.erase(name);
  add_coeff(t.consts_, name, c);
  return t;
}

LinearTerm LinearTerm::const_to_var(const std::string &name) const {
  auto it = consts_.find(name);
  if (it == consts_.end())
    return *this;
  LinearTerm t = *this;
  Integer c = it->second;
  t.consts_.erase(name);
  add_coeff(t.vars_, name, c);
  return t;
}

LinearTerm &LinearTerm::operator+=(const LinearTerm &o) {
  for (const auto &[k, c] : o.vars_)
    add_coeff(vars_, k, c);
  for (const auto &[k, c] : o.consts_)
    add_coeff(consts_, k, c);
  literal_ += o.literal_;
  return *this;
}

LinearTerm &LinearTerm::operator-=(const LinearTerm &o) {
  for (const auto &[k, c] : o.vars_)
    add_coeff(vars_, k, -c);
  for (const auto &[k, c] : o.consts_)
    add_coeff(consts_, k, -c);
  literal_ -= o.literal_;
  return *this;
}

LinearTerm &LinearTerm::operator*=(const Integer &c) {
  if (c == 0) {
    vars_.clear();
    consts_.clear();
    literal_ = 0;
    return *this;
  }
  for (auto &kv : vars_)
    kv.second *= c;
  for (auto &kv : consts_)
    kv.second *= c;
  literal_ *= c;
  return *this;
}

bool operator==(const LinearTerm &a, const LinearTerm &b) {
  return compare(a, b) == 0;
}

int compare(const LinearTerm &a, const LinearTerm &b) {
  if (int c = compare_maps(a.vars_, b.vars_))
    return c;
  if (int c = compare_maps(a.consts_, b.consts_))
    return c;
  int c = cmp(a.literal_, b.literal_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string LinearTerm::to_string() const {
  std::string out;
  auto emit = [&out](const Integer &c, const std::string &name) {
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0)
        out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1)
        out += mag.get_str() + "*";
      out += name;
    }
  };
  for (const auto &[k, c] : vars_)
    emit(c, k);
  for (const auto &[k, c] : consts_)
    emit(c, k);
  if (literal_ != 0 || out.empty())
    emit(literal_, "");
  return out;
}

const char *to_string(Cmp c) {
  switch (c) {
  case Cmp::Lt:
    return "<";
  case Cmp::Le:
    return "<=";
  case Cmp::Eq:
    return "=";
  case Cmp::Ne:
    return "!=";
  case Cmp::Ge:
    return ">=";
  case Cmp::Gt:
    return ">";
  }
  return "?";
}

//===----------------------------------------------------------------------===//
// Formula
//===----------------------------------------------------------------------===//

Formula::Formula() : node_(std::make_shared<FormulaNode>(FormulaNode{True{}})) {}

Formula::Formula(Node n)
    : node_(std::make_shared<FormulaNode>(FormulaNode{std::move(n)})) {}

const Formula::Node &Formula::node() const { return node_->node; }

Formula Formula::truth() { return Formula(True{}); }
Formula Formula::falsity() { return Formula(False{}); }
Formula Formula::atom(Cmp c, LinearTerm l, LinearTerm r) {
  return Formula(Atom{c, std::move(l), std::move(r)});
}
Formula Formula::cong(Integer m, LinearTerm t, Integer r) {
  return Formula(Cong{std::move(m), std::move(t), std::move(r)});
}
Formula Formula::negation(Formula f) { return Formula(Not{std::move(f)}); }
Formula Formula::implies(Formula a, Formula b) {
  return Formula(Implies{std::move(a), std::move(b)});
}
Formula Formula::exists(std::string v, Formula b) {
  return Formula(Exists{std::move(v), std::move(b)});
}
Formula Formula::forall(std::string v, Formula b) {
  return Formula(Forall{std::move(v), std::move(b)});
}

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty())
    return truth();
  if (fs.size() == 1)
    return fs.front();
  return Formula(And{std::move(fs)});
}

Formula Formula::disj(std::vector<Formula> fs) {
  if (fs.empty())
    return falsity();
  if (fs.size() == 1)
    return fs.front();
  return Formula(Or{std::move(fs)});
}

namespace {

bool same_list(const std::vector<Formula> &a, const std::vector<Formula> &b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

bool operator==(const Formula &a, const Formula &b) {
  if (a.node_ == b.node_)
    return true;
  const auto &na = a.node(), &nb = b.node();
  if (na.index() != nb.index())
    return false;
  return std::visit(
      [&nb](const auto &x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T &y = std::get<T>(nb);
        if constexpr (std::is_same_v<T, Formula::True> ||
                      std::is_same_v<T, Formula::False>)
          return true;
        else if constexpr (std::is_same_v<T, Formula::Atom>)
          return x.cmp == y.cmp && x.lhs == y.lhs && x.rhs == y.rhs;
        else if constexpr (std::is_same_v<T, Formula::Cong>)
          return x.modulus == y.modulus && x.term == y.term &&
                 x.residue == y.residue;
        else if constexpr (std::is_same_v<T, Formula::Not>)
          return x.body == y.body;
        else if constexpr (std::is_same_v<T, Formula::And> ||
                           std::is_same_v<T, Formula::Or>)
          return same_list(x.args, y.args);
        else if constexpr (std::is_same_v<T, Formula::Implies>)
          return x.lhs == y.lhs && x.rhs == y.rhs;
        else
          return x.var == y.var && x.body == y.body;
      },
      na);
}

//===----------------------------------------------------------------------===//
// Lexer and parser
//===----------------------------------------------------------------------===//

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string &s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    static const char *two[] = {"<=", ">=", "!=", "->"};
    bool matched = false;
    for (const char *t : two) {
      if (s.compare(i, 2, t) == 0) {
        out.push_back({Tok::Sym, t, i});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched)
      continue;
    if (std::string("()+-*%<=>!&|.").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string &text, const std::set<std::string> &consts)
      : toks_(lex(text)), consts_(consts) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Tok::End)
      fail("unexpected token '" + peek().text + "'");
    return f;
  }

private:
  struct Backtrack {};

  const Token &peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool is_sym(const char *s, std::size_t ahead = 0) const {
    const Token &t = peek(ahead);
    return t.kind == Tok::Sym && t.text == s;
  }
  bool accept(const char *s) {
    if (is_sym(s)) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().pos);
  }
  void expect(const char *s) {
    if (!accept(s))
      fail(std::string("expected '") + s + "'");
  }

  Formula formula() {
    const Token &t = peek();
    if (t.kind == Tok::Ident && (t.text == "E" || t.text == "A") &&
        peek(1).kind == Tok::Ident && is_sym(".", 2)) {
      bool ex = t.text == "E";
      std::string var = peek(1).text;
      pos_ += 3;
      Formula body = formula();
      return ex ? Formula::exists(var, body) : Formula::forall(var, body);
    }
    return impl();
  }

  Formula impl() {
    Formula lhs = disj();
    if (accept("->"))
      return Formula::implies(lhs, impl());
    return lhs;
  }

  Formula disj() {
    std::vector<Formula> args{conj()};
    while (accept("|"))
      args.push_back(conj());
    return Formula::disj(std::move(args));
  }

  Formula conj() {
    std::vector<Formula> args{neg()};
    while (accept("&"))
      args.push_back(neg());
    return Formula::conj(std::move(args));
  }

  Formula neg() {
    if (accept("!"))
      return Formula::negation(neg());
    if (is_sym("(")) {
      std::size_t save = pos_;
      try {
        return atom();
      } catch (const ParseError &) {
        pos_ = save;
      }
      expect("(");
      Formula f = formula();
      expect(")");
      return f;
    }
    return atom();
  }

  Formula atom() {
    const Token &t = peek();
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false")) {
      ++pos_;
      return t.text == "true" ? Formula::truth() : Formula::falsity();
    }
    LinearTerm lhs = term();
    if (accept("%")) {
      Integer m = natural();
      expect("=");
      Integer r = natural();
      if (m < 2)
        fail("congruence modulus must be at least 2");
      if (r >= m)
        fail("congruence residue must be below the modulus");
      return Formula::cong(m, lhs, r);
    }
    static const std::pair<const char *, Cmp> cmps[] = {
        {"<=", Cmp::Le}, {">=", Cmp::Ge}, {"!=", Cmp::Ne},
        {"<", Cmp::Lt},  {">", Cmp::Gt},  {"=", Cmp::Eq}};
    for (const auto &[s, c] : cmps) {
      if (accept(s))
        return Formula::atom(c, lhs, term());
    }
    fail("expected comparison");
  }

  Integer natural() {
    const Token &t = peek();
    if (t.kind != Tok::Int)
      fail("expected natural number");
    ++pos_;
    return Integer(t.text);
  }

  LinearTerm term() {
    bool negate = accept("-");
    LinearTerm t = prod();
    if (negate)
      t = -t;
    for (;;) {
      if (accept("+"))
        t += prod();
      else if (is_sym("-") && !is_sym("->")) {
        ++pos_;
        t -= prod();
      } else
        break;
    }
    return t;
  }

  LinearTerm prod() {
    Integer coeff = 1;
    if (peek().kind == Tok::Int && is_sym("*", 1)) {
      coeff = Integer(peek().text);
      pos_ += 2;
    }
    const Token &t = peek();
    LinearTerm base;
    if (t.kind == Tok::Ident) {
      if (t.text == "true" || t.text == "false")
        fail("unexpected keyword in term");
      ++pos_;
      base = consts_.count(t.text) ? LinearTerm::constant(t.text)
                                   : LinearTerm::variable(t.text);
    } else if (t.kind == Tok::Int) {
      ++pos_;
      base = LinearTerm(Integer(t.text));
    } else if (accept("(")) {
      base = term();
      expect(")");
    } else {
      fail("expected term");
    }
    return base * coeff;
  }

  std::vector<Token> toks_;
  const std::set<std::string> &consts_;
  std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(const std::string &text,
                      const std::set<std::string> &known_constants) {
  return Parser(text, known_constants).parse_all();
}

//===----------------------------------------------------------------------===//
// Printer
//===----------------------------------------------------------------------===//

namespace {

// Grammar levels: formula, impl, disj, conj, neg.
enum Level { LQuant = 0, LImpl = 1, LDisj = 2, LConj = 3, LNeg = 4 };

void print_rec(const Formula &f, int ctx, std::string &out) {
  auto wrap = [&](int own, auto &&body) {
    bool paren = own < ctx;
    if (paren)
      out += "(";
    body();
    if (paren)
      out += ")";
  };
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::True>) {
          out += "true";
        } else if constexpr (std::is_same_v<T, Formula::False>) {
          out += "false";
        } else if constexpr (std::is_same_v<T, Formula::Atom>) {
          out += x.lhs.to_string();
          out += " ";
          out += to_string(x.cmp);
          out += " ";
          out += x.rhs.to_string();
        } else if constexpr (std::is_same_v<T, Formula::Cong>) {
          out += x.term.to_string() + " % " + x.modulus.get_str() + " = " +
                 x.residue.get_str();
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          out += "!";
          print_rec(x.body, LNeg, out);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          wrap(LConj, [&] {
            for (std::size_t i = 0; i < x.args.size(); ++i) {
              if (i)
                out += " & ";
              print_rec(x.args[i], LNeg, out);
            }
          });
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          wrap(LDisj, [&] {
            for (std::size_t i = 0; i < x.args.size(); ++i) {
              if (i)
                out += " | ";
              print_rec(x.args[i], LConj, out);
            }
          });
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          wrap(LImpl, [&] {
            print_rec(x.lhs, LDisj, out);
            out += " -> ";
            print_rec(x.rhs, LImpl, out);
          });
        } else {
          constexpr bool ex = std::is_same_v<T, Formula::Exists>;
          wrap(LQuant, [&] {
            out += ex ? "E " : "A ";
            out += x.var + ". ";
            print_rec(x.body, LQuant, out);
          });
        }
      },
      f.node());
}

} // namespace

std::string print(const Formula &f) {
  std::string out;
  print_rec(f, LQuant, out);
  return out;
}

//===----------------------------------------------------------------------===//
// Variables
//===----------------------------------------------------------------------===//

namespace {

void collect_free(const Formula &f, std::set<std::string> &bound,
                  std::vector<std::string> &order,
                  std::set<std::string> &seen) {
  auto term = [&](const LinearTerm &t) {
    for (const auto &kv : t.vars())
      if (!bound.count(kv.first) && seen.insert(kv.first).second)
        order.push_back(kv.first);
  };
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          term(x.lhs);
          term(x.rhs);
        } else if constexpr (std::is_same_v<T, Formula::Cong>) {
          term(x.term);
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          collect_free(x.body, bound, order, seen);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          for (const auto &a : x.args)
            collect_free(a, bound, order, seen);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          collect_free(x.lhs, bound, order, seen);
          collect_free(x.rhs, bound, order, seen);
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall>) {
          bool fresh = bound.insert(x.var).second;
          collect_free(x.body, bound, order, seen);
          if (fresh)
            bound.erase(x.var);
        }
      },
      f.node());
}

void collect_all_names(const Formula &f, std::set<std::string> &names) {
  auto term = [&](const LinearTerm &t) {
    for (const auto &kv : t.vars())
      names.insert(kv.first);
    for (const auto &kv : t.consts())
      names.insert(kv.first);
  };
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          term(x.lhs);
          term(x.rhs);
        } else if constexpr (std::is_same_v<T, Formula::Cong>) {
          term(x.term);
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          collect_all_names(x.body, names);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          for (const auto &a : x.args)
            collect_all_names(a, names);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          collect_all_names(x.lhs, names);
          collect_all_names(x.rhs, names);
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall>) {
          names.insert(x.var);
          collect_all_names(x.body, names);
        }
      },
      f.node());
}

} // namespace

std::vector<std::string> free_vars_ordered(const Formula &f) {
  std::set<std::string> bound, seen;
  std::vector<std::string> order;
  collect_free(f, bound, order, seen);
  return order;
}

std::set<std::string> free_vars(const Formula &f) {
  auto v = free_vars_ordered(f);
  return {v.begin(), v.end()};
}

std::set<std::string> constants_of(const Formula &f) {
  std::set<std::string> names;
  std::function<void(const Formula &)> rec = [&](const Formula &g) {
    auto term = [&](const LinearTerm &t) {
      for (const auto &kv : t.consts())
        names.insert(kv.first);
    };
    std::visit(
        [&](const auto &x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Formula::Atom>) {
            term(x.lhs);
            term(x.rhs);
          } else if constexpr (std::is_same_v<T, Formula::Cong>) {
            term(x.term);
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            rec(x.body);
          } else if constexpr (std::is_same_v<T, Formula::And> ||
                               std::is_same_v<T, Formula::Or>) {
            for (const auto &a : x.args)
              rec(a);
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            rec(x.lhs);
            rec(x.rhs);
          } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                               std::is_same_v<T, Formula::Forall>) {
            rec(x.body);
          }
        },
        g.node());
  };
  rec(f);
  return names;
}

bool is_quantifier_free(const Formula &f) {
  return std::visit(
      [](const auto &x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::Exists> ||
                      std::is_same_v<T, Formula::Forall>)
          return false;
        else if constexpr (std::is_same_v<T, Formula::Not>)
          return is_quantifier_free(x.body);
        else if constexpr (std::is_same_v<T, Formula::And> ||
                           std::is_same_v<T, Formula::Or>)
          return std::all_of(x.args.begin(), x.args.end(),
                             [](const Formula &a) { return is_quantifier_free(a); });
        else if constexpr (std::is_same_v<T, Formula::Implies>)
          return is_quantifier_free(x.lhs) && is_quantifier_free(x.rhs);
        else
          return true;
      },
      f.node());
}

//===----------------------------------------------------------------------===//
// Substitution and normalization
//===----------------------------------------------------------------------===//

namespace {

using Env = std::map<std::string, LinearTerm>;

LinearTerm apply_env(const LinearTerm &t, const Env &env) {
  LinearTerm out = t;
  for (const auto &kv : t.vars()) {
    auto it = env.find(kv.first);
    if (it != env.end())
      out = out.substitute(kv.first, it->second);
  }
  return out;
}

class Normalizer {
public:
  explicit Normalizer(const Formula &f) {
    for (const auto &v : free_vars_ordered(f))
      used_.insert(v);
    for (const auto &c : constants_of(f))
      used_.insert(c);
  }

  Formula run(const Formula &f, bool positive, const Env &env) {
    return std::visit(
        [&](const auto &x) -> Formula {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Formula::True>) {
            return positive ? Formula::truth() : Formula::falsity();
          } else if constexpr (std::is_same_v<T, Formula::False>) {
            return positive ? Formula::falsity() : Formula::truth();
          } else if constexpr (std::is_same_v<T, Formula::Atom>) {
            return atom(x.cmp, apply_env(x.lhs, env) - apply_env(x.rhs, env),
                        positive);
          } else if constexpr (std::is_same_v<T, Formula::Cong>) {
            LinearTerm t = apply_env(x.term, env) - LinearTerm(x.residue);
            if (positive)
              return Formula::cong(x.modulus, t, 0);
            std::vector<Formula> alts;
            for (Integer s = 1; s < x.modulus; ++s)
              alts.push_back(Formula::cong(x.modulus, t - LinearTerm(s), 0));
            return Formula::disj(std::move(alts));
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            return run(x.body, !positive, env);
          } else if constexpr (std::is_same_v<T, Formula::And> ||
                               std::is_same_v<T, Formula::Or>) {
            std::vector<Formula> args;
            for (const auto &a : x.args)
              args.push_back(run(a, positive, env));
            bool is_and = std::is_same_v<T, Formula::And> == positive;
            return is_and ? Formula::conj(std::move(args))
                          : Formula::disj(std::move(args));
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            Formula a = run(x.lhs, !positive, env);
            Formula b = run(x.rhs, positive, env);
            return positive ? Formula::disj({a, b}) : Formula::conj({a, b});
          } else {
            constexpr bool ex = std::is_same_v<T, Formula::Exists>;
            std::string v = fresh(x.var);
            Env inner = env;
            inner[x.var] = LinearTerm::variable(v);
            // Forall becomes ¬∃¬; polarity only decides the outer negation.
            bool body_positive = ex;
            Formula e = Formula::exists(v, run(x.body, body_positive, inner));
            bool negated = ex ? !positive : positive;
            return negated ? Formula::negation(e) : e;
          }
        },
        f.node());
  }

private:
  static Formula atom(Cmp c, const LinearTerm &d, bool positive) {
    if (!positive) {
      switch (c) {
      case Cmp::Lt: c = Cmp::Ge; break;
      case Cmp::Le: c = Cmp::Gt; break;
      case Cmp::Eq: c = Cmp::Ne; break;
      case Cmp::Ne: c = Cmp::Eq; break;
      case Cmp::Ge: c = Cmp::Lt; break;
      case Cmp::Gt: c = Cmp::Le; break;
      }
    }
    const LinearTerm zero;
    const LinearTerm one(Integer(1));
    switch (c) {
    case Cmp::Lt:
      return Formula::atom(Cmp::Le, d + one, zero);
    case Cmp::Le:
      return Formula::atom(Cmp::Le, d, zero);
    case Cmp::Eq:
      return Formula::atom(Cmp::Eq, d, zero);
    case Cmp::Ne:
      return Formula::disj({Formula::atom(Cmp::Le, d + one, zero),
                            Formula::atom(Cmp::Le, -d + one, zero)});
    case Cmp::Ge:
      return Formula::atom(Cmp::Le, -d, zero);
    case Cmp::Gt:
      return Formula::atom(Cmp::Le, -d + one, zero);
    }
    return Formula::truth();
  }

  std::string fresh(const std::string &base) {
    if (used_.insert(base).second)
      return base;
    for (int i = 1;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (used_.insert(cand).second)
        return cand;
    }
  }

  std::set<std::string> used_;
};

} // namespace

Formula normalize(const Formula &f) {
  // Free names are reserved; each binder gets a name not used before it.
  return Normalizer(f).run(f, true, {});
}

Formula substitute(const Formula &f, const std::string &var,
                   const LinearTerm &value) {
  return std::visit(
      [&](const auto &x) -> Formula {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::True> ||
                      std::is_same_v<T, Formula::False>) {
          return f;
        } else if constexpr (std::is_same_v<T, Formula::Atom>) {
          return Formula::atom(x.cmp, x.lhs.substitute(var, value),
                               x.rhs.substitute(var, value));
        } else if constexpr (std::is_same_v<T, Formula::Cong>) {
          return Formula::cong(x.modulus, x.term.substitute(var, value),
                               x.residue);
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          return Formula::negation(substitute(x.body, var, value));
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          std::vector<Formula> args;
          for (const auto &a : x.args)
            args.push_back(substitute(a, var, value));
          return Formula(T{std::move(args)});
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return Formula::implies(substitute(x.lhs, var, value),
                                  substitute(x.rhs, var, value));
        } else {
          if (x.var == var)
            return f;
          if (value.vars().count(x.var)) {
            // Rename the binder away from the substituted value.
            std::set<std::string> names;
            collect_all_names(f, names);
            for (const auto &kv : value.vars())
              names.insert(kv.first);
            std::string v = x.var;
            for (int i = 1; names.count(v); ++i)
              v = x.var + "_" + std::to_string(i);
            Formula body =
                substitute(x.body, x.var, LinearTerm::variable(v));
            return Formula(T{v, substitute(body, var, value)});
          }
          return Formula(T{x.var, substitute(x.body, var, value)});
        }
      },
      f.node());
}

} // namespace grothpres
