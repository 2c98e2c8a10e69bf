//===- semiring.hpp - Profiles, multidimensions and class normal forms -*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_SEMIRING_HPP
#define GROTHPRES_SEMIRING_HPP

#include "grothpres/model.hpp"
#include "grothpres/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grothpres {

/// Entry i counts factors of significance > i, for i = 0..k.
using Profile = std::vector<unsigned>;
/// Antichain of profiles, sorted.
using MDim = std::vector<Profile>;

bool profile_leq(const Profile &a, const Profile &b);
Profile profile_add(const Profile &a, const Profile &b);
/// Maximal elements, sorted and without duplicates.
MDim maximal(std::vector<Profile> ps);
/// D <= D': every element of D lies below some element of D'.
bool mdim_leq(const MDim &d, const MDim &dp);

/// A generator of the semiring: a positive group element or infinity.
struct Factor {
  bool infinite = false;
  GroupElement value;

  static Factor inf() { return {true, {}}; }
  static Factor of(GroupElement g) { return {false, std::move(g)}; }
  int sig(std::size_t k) const {
    return infinite ? static_cast<int>(k) + 1 : value.sig();
  }
};

Profile monomial_profile(const std::vector<Factor> &factors, std::size_t k);

struct MonoTerm {
  Integer coeff; // positive
  std::vector<Factor> factors;
};

struct MonomialSum {
  std::size_t k = 0;
  std::vector<MonoTerm> terms;
};

/// The embedding z + sum q_j b_j of a group element; b_j is variable j-1.
Polynomial embed(const GroupElement &g);

/// Profile of a power product of b_1..b_k (b_j is polynomial variable j-1).
Profile poly_monomial_profile(const Monomial &m, std::size_t k);

struct ClassNF {
  std::size_t k = 0;
  MDim mdim_u;
  Polynomial bounded;

  friend bool operator==(const ClassNF &a, const ClassNF &b) {
    return a.k == b.k && a.mdim_u == b.mdim_u && a.bounded == b.bounded;
  }
  friend bool operator!=(const ClassNF &a, const ClassNF &b) {
    return !(a == b);
  }

  bool is_bounded() const { return mdim_u.empty(); }
  std::string to_string() const;
  std::string to_json() const;
  /// Inverse of to_json. Throws std::invalid_argument.
  static ClassNF from_json(const std::string &text);
};

/// Removes monomials dominated by a profile of `mdim_u`.
Polynomial reduce(const Polynomial &p, const MDim &mdim_u, std::size_t k);

ClassNF class_zero(std::size_t k);
ClassNF class_one(std::size_t k);
ClassNF class_bounded(Polynomial p, std::size_t k);
/// Class of the representative monomial of a profile.
ClassNF class_of_profile(const Profile &d);

ClassNF canonicalize(const MonomialSum &s);
ClassNF class_add(const ClassNF &x, const ClassNF &y);
ClassNF class_mul(const ClassNF &x, const ClassNF &y);

/// Maximal elements of mdim_u together with the surviving bounded profiles.
MDim full_mdim(const ClassNF &x);
/// Does a absorb b, i.e. a + b = a?
bool eats_rel(const ClassNF &a, const ClassNF &b);

std::string profile_to_string(const Profile &p);
std::string mdim_to_string(const MDim &d);
/// b1, b2, ...
std::string b_name(std::uint32_t v);

} // namespace grothpres

#endif // GROTHPRES_SEMIRING_HPP
