#include "oodlsp/preference.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace oodlsp {

Preference::Preference(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "preference " << value << " outside [0, 1]";
    throw ContractViolation(msg.str());
  }
}

WeightVector::WeightVector(std::vector<double> weights, double sum_tolerance)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw ContractViolation("weight vector is empty");
  for (double w : weights_) {
    if (!(w > 0.0 && w <= 1.0)) {
      std::ostringstream msg;
      msg << "weight " << w << " outside (0, 1]";
      throw ContractViolation(msg.str());
    }
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(sum - 1.0) > sum_tolerance) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1";
    throw ContractViolation(msg.str());
  }
}

WeightVector WeightVector::equal(std::size_t arity) {
  if (arity == 0) throw ContractViolation("weight vector is empty");
  return WeightVector(std::vector<double>(arity, 1.0 / static_cast<double>(arity)));
}

}  // namespace oodlsp
