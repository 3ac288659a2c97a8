#include "oodlsp/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oodlsp/aggregate.hpp"

namespace oodlsp {
namespace detail {
namespace {

constexpr int kRefineFactor = 10;

bool supported_step(double step) {
  return std::any_of(std::begin(kGridSteps), std::end(kGridSteps),
                     [step](double s) { return std::abs(s - step) < 1e-12; });
}

void enumerate(const FitProblem& problem, std::vector<int>& parts, std::size_t index, int remaining,
               std::vector<Candidate>& best) {
  const std::size_t k = problem.arity;
  if (index + 1 == k) {
    parts[index] = remaining;
    for (std::size_t op = 0; op < problem.ops.size(); ++op) {
      Candidate c{problem.sse(op, parts, problem.units), parts, op};
      if (best[op].parts.empty() || better(c, best[op])) best[op] = std::move(c);
    }
    return;
  }
  const int slots_after = static_cast<int>(k - index - 1);
  for (int v = 1; v <= remaining - slots_after; ++v) {
    parts[index] = v;
    enumerate(problem, parts, index + 1, remaining - v, best);
  }
}

Candidate refine(const FitProblem& problem, Candidate c) {
  const int units = problem.units * kRefineFactor;
  for (int& p : c.parts) p *= kRefineFactor;
  c.sse = problem.sse(c.op, c.parts, units);
  const std::size_t k = c.parts.size();
  while (true) {
    Candidate best_move = c;
    for (std::size_t from = 0; from < k; ++from) {
      if (c.parts[from] <= 1) continue;
      for (std::size_t to = 0; to < k; ++to) {
        if (to == from) continue;
        Candidate moved = c;
        --moved.parts[from];
        ++moved.parts[to];
        moved.sse = problem.sse(c.op, moved.parts, units);
        if (moved.sse < c.sse && better(moved, best_move)) best_move = std::move(moved);
      }
    }
    if (!(best_move.sse < c.sse)) return c;
    c = std::move(best_move);
  }
}

}  // namespace

FitProblem::FitProblem(std::span<const BlockObservation> observations, std::span<const GcdSymbol> candidates,
                       double grid_step) {
  if (observations.empty()) throw ContractViolation("fit_block: no observations");
  if (candidates.empty()) throw ContractViolation("fit_block: no candidate operators");
  if (!supported_step(grid_step)) {
    throw ContractViolation("fit_block: grid step must be one of 0.05, 0.01, 0.005");
  }
  arity = observations.front().inputs.size();
  if (arity < static_cast<std::size_t>(kMinArity) || arity > static_cast<std::size_t>(kMaxArity)) {
    throw ContractViolation("fit_block: arity " + std::to_string(arity) + " outside 2..8");
  }
  for (const auto& o : observations) {
    if (o.inputs.size() != arity) {
      throw ContractViolation("fit_block: observation '" + o.id + "' has " + std::to_string(o.inputs.size()) +
                              " inputs, expected " + std::to_string(arity));
    }
    std::vector<double> row;
    for (Preference p : o.inputs) row.push_back(p.value());
    inputs.push_back(std::move(row));
    targets.push_back(o.target.value());
  }
  units = static_cast<int>(std::lround(1.0 / grid_step));

  ops.assign(candidates.begin(), candidates.end());
  std::sort(ops.begin(), ops.end(), [](GcdSymbol a, GcdSymbol b) { return level(a) < level(b); });
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  for (GcdSymbol op : ops) {
    const double r = operator_exponent(op, static_cast<int>(arity));
    exponents.push_back(r);
    std::vector<std::vector<double>> per_obs;
    for (const auto& row : inputs) {
      std::vector<double> pw(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        pw[i] = std::isfinite(r) ? std::pow(row[i], r) : 0.0;
      }
      per_obs.push_back(std::move(pw));
    }
    powered.push_back(std::move(per_obs));
  }
}

double FitProblem::sse(std::size_t op, std::span<const int> parts, int unit_count) const {
  const double r = exponents[op];
  const double scale = 1.0 / static_cast<double>(unit_count);
  double total = 0.0;
  for (std::size_t o = 0; o < inputs.size(); ++o) {
    const auto& x = inputs[o];
    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    const double lo = *lo_it, hi = *hi_it;
    double value = 0.0;
    if (r <= kMinLimitExponent) {
      value = lo;
    } else if (r >= kMaxLimitExponent) {
      value = hi;
    } else if (r < 0.0 && lo == 0.0) {
      value = 0.0;
    } else {
      const auto& pw = powered[op][o];
      double acc = 0.0;
      for (std::size_t i = 0; i < arity; ++i) acc += static_cast<double>(parts[i]) * scale * pw[i];
      value = r == 1.0 ? acc : std::pow(acc, 1.0 / r);
      value = std::clamp(value, lo, hi);
    }
    const double d = value - targets[o];
    total += d * d;
  }
  return total;
}

bool better(const Candidate& a, const Candidate& b) noexcept {
  if (a.sse != b.sse) return a.sse < b.sse;
  if (a.parts != b.parts) return a.parts < b.parts;
  return a.op < b.op;
}

void scan_first_part(const FitProblem& problem, int first, std::vector<Candidate>& best_per_op) {
  std::vector<int> parts(problem.arity, 0);
  parts[0] = first;
  enumerate(problem, parts, 1, problem.units - first, best_per_op);
}

CalibrationResult finish(const FitProblem& problem, std::span<const BlockObservation> observations,
                         std::vector<Candidate> best_per_op) {
  Candidate best;
  bool have = false;
  for (auto& c : best_per_op) {
    if (c.parts.empty()) continue;
    Candidate refined = refine(problem, std::move(c));
    if (!have || better(refined, best)) {
      best = std::move(refined);
      have = true;
    }
  }

  const int units = problem.units * kRefineFactor;
  std::vector<double> weights;
  for (int p : best.parts) weights.push_back(static_cast<double>(p) / units);
  CalibrationResult result{WeightVector(weights), problem.ops[best.op], 0.0, false, {}};

  double sse = 0.0;
  for (const auto& o : observations) {
    const double d = aggregate(o.inputs, result.weights, problem.exponents[best.op]).value() - o.target.value();
    sse += d * d;
  }
  result.residual = std::sqrt(sse / static_cast<double>(observations.size()));

  // Weights of columns that are indistinguishable from another column can
  // trade mass freely; with fewer observations than free weights nothing is
  // pinned down.
  const std::size_t k = problem.arity;
  if (problem.inputs.size() + 1 < k) {
    for (std::size_t i = 0; i < k; ++i) result.unidentified.push_back(i);
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const bool same = std::all_of(problem.inputs.begin(), problem.inputs.end(),
                                      [&](const std::vector<double>& row) { return row[i] == row[j]; });
        if (same) {
          result.unidentified.push_back(i);
          break;
        }
      }
    }
  }
  result.underdetermined = !result.unidentified.empty();
  return result;
}

}  // namespace detail

CalibrationResult fit_block(std::span<const BlockObservation> observations, std::span<const GcdSymbol> candidates,
                            double grid_step) {
  const detail::FitProblem problem(observations, candidates, grid_step);
  const int first_max = problem.units - static_cast<int>(problem.arity) + 1;
  std::vector<std::vector<detail::Candidate>> per_first(static_cast<std::size_t>(std::max(first_max, 0)),
                                                        std::vector<detail::Candidate>(problem.ops.size()));

#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= first_max; ++first) {
    detail::scan_first_part(problem, first, per_first[static_cast<std::size_t>(first - 1)]);
  }

  std::vector<detail::Candidate> best(problem.ops.size());
  for (const auto& slice : per_first) {
    for (std::size_t op = 0; op < slice.size(); ++op) {
      if (slice[op].parts.empty()) continue;
      if (best[op].parts.empty() || detail::better(slice[op], best[op])) best[op] = slice[op];
    }
  }
  return detail::finish(problem, observations, std::move(best));
}

}  // namespace oodlsp
