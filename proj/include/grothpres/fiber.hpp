//===- fiber.hpp - Splitting a conjunction along its last variable -*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Shared by cell decomposition and counting: a conjunction over (y, x) is cut
// into pieces on which the x-fiber is a single point or a progression between
// one lower and one upper bound, with the remaining constraints on y.
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_FIBER_HPP
#define GROTHPRES_FIBER_HPP

#include "grothpres/qe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grothpres {

/// num / den with den >= 1.
struct BoundTerm {
  LinearTerm num;
  Integer den = 1;

  std::string to_string() const;
  friend bool operator==(const BoundTerm &a, const BoundTerm &b) {
    return a.den == b.den && a.num == b.num;
  }
};

struct Fiber {
  enum Kind { Point, Interval };
  Kind kind = Interval;
  /// Point: x = point.num / point.den, divisibility is part of `base`.
  BoundTerm point;
  /// Interval: a*x >= lower.num with a = lower.den, and b*x <= upper.num
  /// with b = upper.den; x = residue (mod modulus).
  std::optional<BoundTerm> lower, upper;
  Integer modulus = 1, residue = 0;
  /// Constraints on the other variables.
  Conj base;
};

/// Disjoint pieces whose union is `c`.
std::vector<Fiber> split_last(const Conj &c, const std::string &var,
                              const ModelSpec *model = nullptr);

/// Conditions on the other variables under which the interval fiber is
/// nonempty, as a DNF (not necessarily disjoint).
Dnf fiber_nonempty(const Fiber &f, const std::string &var,
                   const ModelSpec *model = nullptr);

/// The fiber constraints themselves, as a conjunction mentioning `var`.
Conj fiber_constraints(const Fiber &f, const std::string &var);

} // namespace grothpres

#endif // GROTHPRES_FIBER_HPP
