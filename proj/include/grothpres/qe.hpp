//===- qe.hpp - Cooper quantifier elimination -------------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_QE_HPP
#define GROTHPRES_QE_HPP

#include "grothpres/model.hpp"
#include "grothpres/syntax.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace grothpres {

/// Normalized atom: `term <= 0`, `term = 0`, or `modulus | term`.
struct LinAtom {
  enum Kind { Le, Eq, Dvd };
  Kind kind;
  LinearTerm term;
  Integer modulus = 0;

  static LinAtom le(LinearTerm t) { return {Le, std::move(t), 0}; }
  static LinAtom eq(LinearTerm t) { return {Eq, std::move(t), 0}; }
  static LinAtom dvd(Integer m, LinearTerm t) {
    return {Dvd, std::move(t), std::move(m)};
  }

  friend bool operator==(const LinAtom &a, const LinAtom &b);
  friend bool operator<(const LinAtom &a, const LinAtom &b);
};

using Conj = std::vector<LinAtom>;
/// Disjunction of conjunctions; empty means false.
using Dnf = std::vector<Conj>;

/// Canonical form of a conjunction, or nullopt if it is trivially false.
/// With a model, atoms whose only symbols are constants known to the model
/// are decided outright.
std::optional<Conj> simplify_conj(Conj c, const ModelSpec *model = nullptr);

/// Simplifies every disjunct, drops false ones and duplicates.
Dnf simplify_dnf(const Dnf &d, const ModelSpec *model = nullptr);

Dnf dnf_and(const Dnf &a, const Dnf &b, const ModelSpec *model = nullptr);
Dnf dnf_or(Dnf a, const Dnf &b);
Dnf negate_atom(const LinAtom &a);
Dnf negate(const Dnf &d, const ModelSpec *model = nullptr);
/// OR_i (a_1 & ... & a_{i-1} & !a_i): the negation as disjoint pieces.
Dnf disjoint_negation(const Conj &c, const ModelSpec *model = nullptr);
/// Equivalent DNF whose disjuncts are pairwise disjoint.
Dnf disjoint_dnf(const Dnf &d, const ModelSpec *model = nullptr);

/// Quantifier-free formula (any shape) to DNF. Throws on quantifiers.
Dnf to_dnf(const Formula &f, const ModelSpec *model = nullptr);
Formula to_formula(const Dnf &d);
Formula to_formula(const Conj &c);

/// Eliminates `var` from one conjunction.
Dnf exists_conj(const std::string &var, const Conj &c,
                const ModelSpec *model = nullptr);
Dnf exists_dnf(const std::string &var, const Dnf &d,
               const ModelSpec *model = nullptr);
Dnf exists_all(const std::vector<std::string> &vars, const Dnf &d,
               const ModelSpec *model = nullptr);

/// Full elimination; the result mentions only free variables of f.
Dnf eliminate_dnf(const Formula &f, const ModelSpec *model = nullptr);
Formula eliminate(const Formula &f);

/// Equivalent QF formula with trivially false conjuncts removed, congruences
/// merged and constant atoms folded.
Formula simplify(const Formula &f);

/// Is the conjunction satisfiable in the model? All free variables are
/// existentially closed; every constant must be known to the model.
bool satisfiable(const Conj &c, const ModelSpec &model);
bool satisfiable(const Dnf &d, const ModelSpec &model);

/// Variables mentioned by the atoms.
std::set<std::string> vars_of(const Conj &c);
std::set<std::string> vars_of(const Dnf &d);

/// Reinterprets the given constants as variables, and back.
Conj consts_to_vars(const Conj &c, const std::set<std::string> &names);
Dnf consts_to_vars(const Dnf &d, const std::set<std::string> &names);
Conj vars_to_consts(const Conj &c, const std::set<std::string> &names);
Dnf vars_to_consts(const Dnf &d, const std::set<std::string> &names);

Conj substitute(const Conj &c, const std::string &var, const LinearTerm &value);

std::string to_string(const LinAtom &a);

} // namespace grothpres

#endif // GROTHPRES_QE_HPP
