//===- counting.hpp - Parametric lattice-point counting ---------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_COUNTING_HPP
#define GROTHPRES_COUNTING_HPP

#include "grothpres/polynomial.hpp"
#include "grothpres/qe.hpp"
#include "grothpres/semiring.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace grothpres {

class Unbounded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CountPiece {
  /// Conditions on the symbols (parameters as variables in count_family
  /// results, as constants in raw results).
  Conj guard;
  /// Polynomial in the symbols, variable i = symbols[i].
  Polynomial count;
  bool infinite = false;
};

/// Counting over integer points of `d` in the variables `xvars`; every other
/// name is a symbol listed in `symbols` (as a constant). Pieces may overlap;
/// the count at a symbol value is the sum over the pieces whose guard holds.
/// Ground atoms over constants known to `model` are decided on the way.
std::vector<CountPiece> raw_count(const Dnf &d,
                                  const std::vector<std::string> &xvars,
                                  const std::vector<std::string> &symbols,
                                  const ModelSpec *model);

/// Replaces every constant by its integer value (k = 0 only).
Dnf inline_constants(const Dnf &d, const ModelSpec &spec);

/// Refines overlapping pieces (guards over `symbols` as variables) into a
/// partition of the whole symbol space, summing counts; empty pieces are
/// dropped.
std::vector<CountPiece> refine_pieces(const std::vector<CountPiece> &pieces,
                                      const ModelSpec &model);

/// Number of integer solutions in the non-parameter variables as a
/// piecewise polynomial in the parameters. Guards partition the parameter
/// space; polynomial variable i is params[i].
std::vector<CountPiece> count_family(const Formula &f,
                                     const std::vector<std::string> &params,
                                     const ModelSpec &spec = {});

/// Value of a count_family result at integer parameters; nullopt for an
/// infinite fiber.
std::optional<Integer> evaluate_count(const std::vector<CountPiece> &pieces,
                                      const std::vector<std::string> &params,
                                      const std::vector<Integer> &values,
                                      const ModelSpec &spec = {});

/// Hyper-cardinality as a polynomial in b_1..b_k. Throws Unbounded.
Polynomial hyper_card(const Formula &f, const ModelSpec &spec);
Polynomial hyper_card(const Dnf &d, const std::vector<std::string> &xvars,
                      const ModelSpec &spec);

} // namespace grothpres

#endif // GROTHPRES_COUNTING_HPP
