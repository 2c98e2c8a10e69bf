//===- classify.hpp - Classes, dimensions and bijection decisions -*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_CLASSIFY_HPP
#define GROTHPRES_CLASSIFY_HPP

#include "grothpres/counting.hpp"
#include "grothpres/semiring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grothpres {

/// Canonical class of the solution set of `f` (free variables in order of
/// first occurrence).
ClassNF grothendieck_class(const Formula &f, const ModelSpec &spec);
ClassNF grothendieck_class(const Dnf &d, const std::vector<std::string> &xvars,
                           const ModelSpec &spec);

struct EquivResult {
  bool equivalent;
  ClassNF first, second;
};

EquivResult decide_equiv(const Formula &f1, const Formula &f2,
                         const ModelSpec &spec);

MDim mdim_of(const Formula &f, const ModelSpec &spec);
/// Largest entry i over the multidimension; nullopt for the empty set.
std::optional<unsigned> dim_level(const Formula &f, std::size_t level,
                                  const ModelSpec &spec);

class UnboundedFiber : public std::runtime_error {
public:
  UnboundedFiber(const std::string &msg, Formula guard)
      : std::runtime_error(msg), guard(std::move(guard)) {}
  Formula guard;
};

/// Do the fibers over every integer parameter tuple in `domain` admit a
/// definable family of bijections? Requires k = 0; throws UnboundedFiber
/// when some fiber over the domain is infinite.
bool family_equiv(const Formula &f1, const Formula &f2,
                  const std::vector<std::string> &params,
                  const Formula &domain, const ModelSpec &spec);

} // namespace grothpres

#endif // GROTHPRES_CLASSIFY_HPP
