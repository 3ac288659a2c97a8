#pragma once

#include <span>

#include "oodlsp/gcd_operator.hpp"
#include "oodlsp/preference.hpp"

namespace oodlsp {

/// Exponents at or beyond these bounds are evaluated as min / max.
inline constexpr double kMinLimitExponent = -50.0;
inline constexpr double kMaxLimitExponent = 50.0;
/// Beyond this magnitude the mean is computed in the log domain.
inline constexpr double kLogDomainExponent = 10.0;
/// Exponents closer to zero than this use the geometric-mean limit.
inline constexpr double kGeometricExponent = 1e-9;

/// Weighted power mean (W1*E1^r + ... + Wk*Ek^r)^(1/r) of `values`.
/// r may be +-infinity. The result always lies in [min(values), max(values)].
[[nodiscard]] Preference aggregate(std::span<const Preference> values, const WeightVector& weights,
                                   double r);

[[nodiscard]] Preference aggregate(std::span<const Preference> values, const WeightVector& weights,
                                   GcdSymbol op);

namespace detail {

// Unchecked kernel shared by aggregate(), the andness estimator and the
// calibration search. values in [0,1], weights positive and normalized.
[[nodiscard]] double power_mean(std::span<const double> values, std::span<const double> weights,
                                double r) noexcept;

// Equal-weight variant used by the Monte Carlo andness kernels.
[[nodiscard]] double power_mean_equal(std::span<const double> values, double r) noexcept;

}  // namespace detail
}  // namespace oodlsp
