#include "oodlsp/calibration.hpp"

namespace oodlsp::reference {

CalibrationResult fit_block(std::span<const BlockObservation> observations, std::span<const GcdSymbol> candidates,
                            double grid_step) {
  const detail::FitProblem problem(observations, candidates, grid_step);
  std::vector<detail::Candidate> best(problem.ops.size());
  const int first_max = problem.units - static_cast<int>(problem.arity) + 1;
  for (int first = 1; first <= first_max; ++first) detail::scan_first_part(problem, first, best);
  return detail::finish(problem, observations, std::move(best));
}

}  // namespace oodlsp::reference
