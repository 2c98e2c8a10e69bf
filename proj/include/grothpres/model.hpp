//===- model.hpp - The Z-group Q^k x Z and QF evaluation --------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_MODEL_HPP
#define GROTHPRES_MODEL_HPP

#include "grothpres/syntax.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grothpres {

/// Element of Q^k x Z, ordered lexicographically with the highest rational
/// coordinate most significant. Coordinate i (1..k) has significance i; the
/// integer slot has significance 0.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::size_t k) : rat_(k) {}
  /// `rat[i]` is the coordinate of significance i+1.
  GroupElement(std::vector<Rational> rat, Integer z);

  static GroupElement integer(std::size_t k, Integer z);
  /// The unit of significance i: u_i for i >= 1, the element 1 for i = 0.
  static GroupElement unit(std::size_t k, std::size_t i);

  std::size_t k() const { return rat_.size(); }
  /// Coordinate of significance i in 1..k.
  const Rational &coord(std::size_t i) const { return rat_[i - 1]; }
  void set_coord(std::size_t i, Rational q);
  const Integer &int_coord() const { return z_; }
  void set_int_coord(Integer z) { z_ = std::move(z); }

  /// Largest index of a nonzero coordinate; -1 for zero.
  int sig() const;
  bool is_zero() const { return sig() < 0; }
  int sign() const;

  /// Same element viewed in Q^new_k x Z (new_k >= k), new coordinates zero.
  GroupElement lifted(std::size_t new_k) const;

  GroupElement &operator+=(const GroupElement &o);
  GroupElement &operator-=(const GroupElement &o);
  GroupElement &operator*=(const Integer &c);
  friend GroupElement operator+(GroupElement a, const GroupElement &b) {
    return a += b;
  }
  friend GroupElement operator-(GroupElement a, const GroupElement &b) {
    return a -= b;
  }
  friend GroupElement operator*(GroupElement a, const Integer &c) {
    return a *= c;
  }
  friend GroupElement operator*(const Integer &c, GroupElement a) {
    return a *= c;
  }
  GroupElement operator-() const { return *this * Integer(-1); }

  friend int cmp(const GroupElement &a, const GroupElement &b);
  friend bool operator==(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) != 0;
  }
  friend bool operator<(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const GroupElement &a, const GroupElement &b) {
    return cmp(a, b) >= 0;
  }

  /// `[q_k,...,q_1;z]`, or the bare integer when k = 0.
  std::string to_string() const;

private:
  std::vector<Rational> rat_;
  Integer z_ = 0;
};

/// Parses `[q_k,...,q_1;z]` (or a bare integer) as an element of Q^k x Z.
/// Throws std::invalid_argument on malformed input or wrong arity.
GroupElement parse_group_element(const std::string &text, std::size_t k);

struct FloorDivResult {
  GroupElement q;
  Integer r;
};

/// a = m*q + r*1 with 0 <= r < m.
FloorDivResult floor_div(const GroupElement &a, const Integer &m);

/// Residue of a modulo m: the integer slot mod m.
Integer residue(const GroupElement &a, const Integer &m);

struct ModelSpec {
  std::size_t k = 0;
  std::map<std::string, GroupElement> constants;

  std::set<std::string> constant_names() const;
  /// Throws std::invalid_argument if a constant has the wrong arity.
  void validate() const;
};

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Assignment = std::map<std::string, GroupElement>;

GroupElement eval_term(const LinearTerm &t, const Assignment &point,
                       const ModelSpec &spec);

/// Truth of a quantifier-free formula at `point`.
bool eval_qf(const Formula &f, const Assignment &point, const ModelSpec &spec);

} // namespace grothpres

#endif // GROTHPRES_MODEL_HPP
