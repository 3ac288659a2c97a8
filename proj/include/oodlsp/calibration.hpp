#pragma once

#include <span>
#include <string>
#include <vector>

#include "oodlsp/gcd_operator.hpp"
#include "oodlsp/preference.hpp"

namespace oodlsp {

/// One observed evaluation of an aggregation block: the child preferences in
/// fixed order and the block output they produced.
struct BlockObservation {
  std::string id;
  std::vector<Preference> inputs;
  Preference target;
};

struct CalibrationResult {
  WeightVector weights;
  GcdSymbol op;
  double residual;  // root-mean-square error over the observations
  bool underdetermined = false;
  std::vector<std::size_t> unidentified;  // weight indices the data cannot pin down
};

/// Grid steps accepted by fit_block().
inline constexpr double kGridSteps[] = {0.05, 0.01, 0.005};

/// Least-squares recovery of a block's weights and operator.
///
/// Every weight vector on the simplex grid with spacing `grid_step` (all
/// weights > 0) is scored against every candidate operator. The best grid
/// point of each operator is then refined by pairwise weight transfers of
/// grid_step/10 until no transfer lowers the error, and the overall best is
/// returned. Ties go to the lexicographically smallest weight vector, then to
/// the more conjunctive operator, so the answer does not depend on thread
/// scheduling.
///
/// Throws ContractViolation on empty input, inconsistent arity, arity outside
/// [2, 8], an empty candidate list or an unsupported grid step.
[[nodiscard]] CalibrationResult fit_block(std::span<const BlockObservation> observations,
                                          std::span<const GcdSymbol> candidates, double grid_step);

namespace reference {

/// Single-threaded implementation; returns results identical to
/// oodlsp::fit_block.
[[nodiscard]] CalibrationResult fit_block(std::span<const BlockObservation> observations,
                                          std::span<const GcdSymbol> candidates, double grid_step);

}  // namespace reference

namespace detail {

// Shared pieces of the parallel and serial searches.
struct FitProblem {
  std::size_t arity = 0;
  int units = 0;  // 1 / grid_step
  std::vector<GcdSymbol> ops;
  std::vector<double> exponents;                // per op
  std::vector<std::vector<double>> inputs;      // per observation
  std::vector<double> targets;
  // powered[op][obs][i] = inputs[obs][i]^r for finite, non-limit exponents
  std::vector<std::vector<std::vector<double>>> powered;

  FitProblem(std::span<const BlockObservation> observations, std::span<const GcdSymbol> candidates,
             double grid_step);

  // Sum of squared errors with weights parts[i] / unit_count.
  [[nodiscard]] double sse(std::size_t op, std::span<const int> parts, int unit_count) const;
};

struct Candidate {
  double sse = 0.0;
  std::vector<int> parts;  // weights in grid (or refined-grid) units
  std::size_t op = 0;
};

// Strict total order: lower error, then lexicographically smaller weights,
// then more conjunctive operator.
[[nodiscard]] bool better(const Candidate& a, const Candidate& b) noexcept;

// Best grid point for each op among compositions whose first part equals
// `first`.
void scan_first_part(const FitProblem& problem, int first, std::vector<Candidate>& best_per_op);

[[nodiscard]] CalibrationResult finish(const FitProblem& problem, std::span<const BlockObservation> observations,
                                       std::vector<Candidate> best_per_op);

}  // namespace detail
}  // namespace oodlsp
