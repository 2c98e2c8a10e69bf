//===- syntax.hpp - Formula AST, parser, printer, normalizer ----*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// First-order formulas over the ordered-group language (0, +, -, <) with
// integer literals, named model constants and congruence atoms.
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_SYNTAX_HPP
#define GROTHPRES_SYNTAX_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace grothpres {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer linear combination of variables and named constants plus a
/// literal. Zero coefficients are never stored, so structural equality is
/// semantic equality.
class LinearTerm {
public:
  LinearTerm() = default;
  explicit LinearTerm(Integer literal) : literal_(std::move(literal)) {}

  static LinearTerm variable(const std::string &name, Integer coeff = 1);
  static LinearTerm constant(const std::string &name, Integer coeff = 1);

  const std::map<std::string, Integer> &vars() const { return vars_; }
  const std::map<std::string, Integer> &consts() const { return consts_; }
  const Integer &literal() const { return literal_; }

  Integer var_coeff(const std::string &name) const;
  Integer const_coeff(const std::string &name) const;
  void set_var_coeff(const std::string &name, const Integer &c);
  void set_const_coeff(const std::string &name, const Integer &c);
  void set_literal(Integer c) { literal_ = std::move(c); }

  bool has_vars() const { return !vars_.empty(); }
  bool is_constant_literal() const { return vars_.empty() && consts_.empty(); }
  bool is_zero() const { return is_constant_literal() && literal_ == 0; }

  /// The same term without its literal.
  LinearTerm linear_part() const;

  /// Replaces `name` by `value` (variable occurrence only).
  LinearTerm substitute(const std::string &name, const LinearTerm &value) const;
  /// Turns variable `name` into a constant of the same name.
  LinearTerm var_to_const(const std::string &name) const;
  LinearTerm const_to_var(const std::string &name) const;

  LinearTerm &operator+=(const LinearTerm &o);
  LinearTerm &operator-=(const LinearTerm &o);
  LinearTerm &operator*=(const Integer &c);
  friend LinearTerm operator+(LinearTerm a, const LinearTerm &b) { return a += b; }
  friend LinearTerm operator-(LinearTerm a, const LinearTerm &b) { return a -= b; }
  friend LinearTerm operator*(LinearTerm a, const Integer &c) { return a *= c; }
  friend LinearTerm operator*(const Integer &c, LinearTerm a) { return a *= c; }
  LinearTerm operator-() const { return *this * Integer(-1); }

  friend bool operator==(const LinearTerm &a, const LinearTerm &b);
  /// Total order used for canonical sorting.
  friend int compare(const LinearTerm &a, const LinearTerm &b);
  friend bool operator<(const LinearTerm &a, const LinearTerm &b) {
    return compare(a, b) < 0;
  }

  std::string to_string() const;

private:
  std::map<std::string, Integer> vars_;
  std::map<std::string, Integer> consts_;
  Integer literal_ = 0;
};

enum class Cmp { Lt, Le, Eq, Ne, Ge, Gt };

const char *to_string(Cmp c);

class Formula;
struct FormulaNode;

namespace node {
struct True {};
struct False {};
struct Atom;
struct Cong;
struct Not;
struct And;
struct Or;
struct Implies;
struct Exists;
struct Forall;
} // namespace node

/// Immutable, shared formula tree.
class Formula {
public:
  using True = node::True;
  using False = node::False;
  using Atom = node::Atom;
  /// term ≡ residue (mod modulus)
  using Cong = node::Cong;
  using Not = node::Not;
  using And = node::And;
  using Or = node::Or;
  using Implies = node::Implies;
  using Exists = node::Exists;
  using Forall = node::Forall;
  using Node = std::variant<True, False, Atom, Cong, Not, And, Or, Implies,
                            Exists, Forall>;

  Formula();
  Formula(Node n);

  const Node &node() const;
  template <class T> const T *as() const;
  template <class T> bool is() const { return as<T>() != nullptr; }

  static Formula truth();
  static Formula falsity();
  static Formula atom(Cmp c, LinearTerm l, LinearTerm r);
  static Formula cong(Integer m, LinearTerm t, Integer r);
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula exists(std::string v, Formula b);
  static Formula forall(std::string v, Formula b);

  friend bool operator==(const Formula &a, const Formula &b);

private:
  std::shared_ptr<const FormulaNode> node_;
};

namespace node {
struct Atom {
  Cmp cmp;
  LinearTerm lhs, rhs;
};
struct Cong {
  Integer modulus;
  LinearTerm term;
  Integer residue;
};
struct Not {
  Formula body;
};
struct And {
  std::vector<Formula> args;
};
struct Or {
  std::vector<Formula> args;
};
struct Implies {
  Formula lhs, rhs;
};
struct Exists {
  std::string var;
  Formula body;
};
struct Forall {
  std::string var;
  Formula body;
};
} // namespace node

struct FormulaNode {
  Formula::Node node;
};

template <class T> const T *Formula::as() const {
  return std::get_if<T>(&node());
}

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// Parses the textual formula grammar. Identifiers listed in
/// `known_constants` become constant references, all others variables.
Formula parse_formula(const std::string &text,
                      const std::set<std::string> &known_constants = {});

/// Prints in the grammar accepted by parse_formula; parse(print(f)) == f.
std::string print(const Formula &f);

std::set<std::string> free_vars(const Formula &f);
/// Free variables in order of first occurrence.
std::vector<std::string> free_vars_ordered(const Formula &f);
std::set<std::string> constants_of(const Formula &f);
bool is_quantifier_free(const Formula &f);

/// Negation normal form with atoms `t <= 0`, `t = 0`, `t ≡ 0 (mod m)`;
/// universal quantifiers become ¬∃¬ and bound variables are renamed apart.
Formula normalize(const Formula &f);

/// Replaces free occurrences of variable `var`.
Formula substitute(const Formula &f, const std::string &var,
                   const LinearTerm &value);

} // namespace grothpres

#endif // GROTHPRES_SYNTAX_HPP
