#include "oodlsp/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oodlsp {
namespace detail {
namespace {

struct Extremes {
  double lo;
  double hi;
};

Extremes extremes(std::span<const double> values) noexcept {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

template <typename WeightAt>
double power_mean_impl(std::span<const double> values, WeightAt weight_at, double r) noexcept {
  const auto [lo, hi] = extremes(values);
  if (r <= kMinLimitExponent) return lo;
  if (r >= kMaxLimitExponent) return hi;
  if (r <= 0.0 && lo == 0.0) return 0.0;

  double result = 0.0;
  if (std::abs(r) < kGeometricExponent) {
    double log_sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) log_sum += weight_at(i) * std::log(values[i]);
    result = std::exp(log_sum);
  } else if (std::abs(r) > kLogDomainExponent) {
    // log-sum-exp over ln(w) + r ln(v); zero inputs (only possible for r > 0)
    // contribute nothing.
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > 0.0) peak = std::max(peak, std::log(weight_at(i)) + r * std::log(values[i]));
    }
    if (peak == -std::numeric_limits<double>::infinity()) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > 0.0) acc += std::exp(std::log(weight_at(i)) + r * std::log(values[i]) - peak);
    }
    result = std::exp((peak + std::log(acc)) / r);
  } else if (r == 1.0) {
    for (std::size_t i = 0; i < values.size(); ++i) result += weight_at(i) * values[i];
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += weight_at(i) * std::pow(values[i], r);
    result = std::pow(acc, 1.0 / r);
  }
  return std::clamp(result, lo, hi);
}

}  // namespace

double power_mean(std::span<const double> values, std::span<const double> weights,
                  double r) noexcept {
  return power_mean_impl(values, [weights](std::size_t i) { return weights[i]; }, r);
}

double power_mean_equal(std::span<const double> values, double r) noexcept {
  const double w = 1.0 / static_cast<double>(values.size());
  return power_mean_impl(values, [w](std::size_t) { return w; }, r);
}

}  // namespace detail

Preference aggregate(std::span<const Preference> values, const WeightVector& weights, double r) {
  if (values.empty()) throw ContractViolation("aggregate: no input preferences");
  if (values.size() != weights.size()) {
    throw ContractViolation("aggregate: " + std::to_string(values.size()) + " values but " +
                            std::to_string(weights.size()) + " weights");
  }
  if (std::isnan(r)) throw ContractViolation("aggregate: exponent is NaN");
  std::vector<double> raw(values.size());
  std::transform(values.begin(), values.end(), raw.begin(),
                 [](Preference p) { return p.value(); });
  return Preference(detail::power_mean(raw, weights.values(), r));
}

Preference aggregate(std::span<const Preference> values, const WeightVector& weights,
                     GcdSymbol op) {
  if (values.size() == 1) return aggregate(values, weights, 1.0);
  return aggregate(values, weights, operator_exponent(op, static_cast<int>(values.size())));
}

}  // namespace oodlsp
