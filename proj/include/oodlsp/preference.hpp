#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace oodlsp {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by table lookups (operator symbols, arities) that have no entry.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Degree of requirement satisfaction on the closed unit interval.
class Preference {
 public:
  constexpr Preference() = default;
  explicit Preference(double value);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }
  [[nodiscard]] double percent() const noexcept { return value_ * 100.0; }

  friend constexpr auto operator<=>(const Preference&, const Preference&) = default;

 private:
  double value_ = 0.0;
};

inline constexpr double kWeightSumTolerance = 1e-9;

/// Relative importances inside one aggregation block. Each weight lies in
/// (0, 1] and the weights sum to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights,
                        double sum_tolerance = kWeightSumTolerance);

  [[nodiscard]] const std::vector<double>& values() const noexcept { return weights_; }
  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return weights_[i]; }

  static WeightVector equal(std::size_t arity);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

}  // namespace oodlsp
