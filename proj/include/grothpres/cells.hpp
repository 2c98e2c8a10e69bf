//===- cells.hpp - Cell decomposition of definable sets ---------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_CELLS_HPP
#define GROTHPRES_CELLS_HPP

#include "grothpres/fiber.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grothpres {

/// One coordinate of a cell. Interval bounds follow Fiber: lower means
/// a*x >= l, upper means b*x <= u.
struct Component {
  Fiber::Kind kind = Fiber::Interval;
  BoundTerm point;
  std::optional<BoundTerm> lower, upper;
  Integer modulus = 1, residue = 0;

  /// Exclusive form of the upper bound: x < (u+1)/b.
  std::optional<BoundTerm> upper_exclusive() const;
};

struct Cell {
  std::vector<std::string> vars;
  /// comps[i] constrains vars[i] in terms of vars[0..i).
  std::vector<Component> comps;

  /// The defining constraints as one conjunction.
  Conj constraints() const;
};

class NotAFunction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InfiniteSet : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Pairwise disjoint nonempty cells covering the solution set, with
/// coordinates in the order of `vars` (default: free variables in order of
/// first occurrence).
std::vector<Cell> decompose(const Formula &f, const ModelSpec &spec,
                            std::vector<std::string> vars = {});
std::vector<Cell> decompose(const Dnf &d, const std::vector<std::string> &vars,
                            const ModelSpec &spec);

bool cell_contains(const Cell &c, const Assignment &point,
                   const ModelSpec &spec);

struct LinearPiece {
  Cell domain;
  BoundTerm value;
};

/// `graph` defines `out` as a function of `inputs`.
std::vector<LinearPiece> piecewise_linear(const Formula &graph,
                                          const std::vector<std::string> &inputs,
                                          const std::string &out,
                                          const ModelSpec &spec);

/// Some a with the set inside [-a, a)^n, or nullopt when unbounded.
std::optional<GroupElement> is_bounded(const Formula &f, const ModelSpec &spec);
std::optional<GroupElement> is_bounded(const std::vector<Cell> &cells,
                                       const ModelSpec &spec);

/// All points, coordinates in the order of `vars` (default as decompose).
/// Throws InfiniteSet.
std::vector<std::vector<GroupElement>>
enumerate_finite(const Formula &f, const ModelSpec &spec,
                 std::vector<std::string> vars = {});

} // namespace grothpres

#endif // GROTHPRES_CELLS_HPP
