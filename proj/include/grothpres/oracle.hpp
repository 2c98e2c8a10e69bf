//===- oracle.hpp - Brute-force ground truth over the integers --*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef GROTHPRES_ORACLE_HPP
#define GROTHPRES_ORACLE_HPP

#include "grothpres/model.hpp"
#include "grothpres/syntax.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace grothpres::oracle {

using Point = std::vector<std::int64_t>;

/// Machine-integer evaluator for k = 0 formulas. A quantified variable ranges
/// over the literal bounds found among the conjuncts of its body (or the
/// hypotheses of a universal implication); lacking those, over
/// [-witness, witness].
class Evaluator {
public:
  Evaluator(const Formula &f, const std::vector<std::string> &vars,
            const ModelSpec &spec = {}, std::int64_t witness = 64);

  bool operator()(const std::int64_t *point) const;
  bool operator()(const Point &p) const { return (*this)(p.data()); }
  std::size_t arity() const { return arity_; }

  struct Node;

private:
  std::shared_ptr<const Node> root_;
  std::size_t arity_, slots_;
};

class Unstable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// All solutions in [-B, B]^n in lexicographic order.
std::vector<Point> enumerate_box(const Evaluator &ev, std::int64_t B);
std::vector<Point> enumerate_box_serial(const Evaluator &ev, std::int64_t B);
std::vector<Point> enumerate_box(const Formula &f,
                                 const std::vector<std::string> &vars,
                                 std::int64_t B, const ModelSpec &spec = {});

std::uint64_t count_box(const Evaluator &ev, std::int64_t B);
std::uint64_t count_box_serial(const Evaluator &ev, std::int64_t B);

/// Count in [-B, B]^n; nullopt ("unbounded") if box 2B has more.
std::optional<std::uint64_t> brute_count(const Formula &f,
                                         const std::vector<std::string> &vars,
                                         std::int64_t B,
                                         const ModelSpec &spec = {});

/// round(log2(count(2M)/count(M))) once stable over three doublings.
unsigned growth_exponent(const Formula &f, const std::vector<std::string> &vars,
                         std::vector<std::int64_t> Ms = {16, 32, 64, 128},
                         const ModelSpec &spec = {});

/// First point of [-B, B]^n where the two formulas differ.
std::optional<Point> disagreement(const Formula &f, const Formula &g,
                                  const std::vector<std::string> &vars,
                                  std::int64_t B, const ModelSpec &spec = {});

struct GenOptions {
  unsigned nvars = 2;
  unsigned quantifiers = 0;
  unsigned atoms = 3;
  int max_coeff = 10;
  /// Literal range of every quantified variable.
  int qbound = 6;
  /// If positive, every free variable gets -box <= x <= box.
  int box = 0;
  bool congruences = true;
  /// Parameters y1..yp. Each x_i then gets -2 <= x_i <= a*y_j + b with
  /// small a > 0, so every fiber is finite.
  unsigned params = 0;
};

/// Variables are x1..xn, parameters y1..yp, quantified ones z1, z2, ...
std::vector<std::string> gen_vars(unsigned n);
std::vector<std::string> gen_params(unsigned p);
Formula random_formula(std::mt19937_64 &rng, const GenOptions &opt);

} // namespace grothpres::oracle

#endif // GROTHPRES_ORACLE_HPP
