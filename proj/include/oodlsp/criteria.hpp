#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oodlsp/preference.hpp"

namespace oodlsp {

enum class Direction { Increasing, Decreasing };

struct Anchor {
  double x = 0.0;   // metric value, in the metric's own units
  double eq = 0.0;  // elementary preference at x

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Elementary criterion: a piecewise-linear map from one metric's value to an
/// elementary preference. Anchors are strictly increasing in x; their eq
/// values are monotone in `direction` and the outer anchors sit at 0 and 1.
class CriterionSpec {
 public:
  CriterionSpec(std::string metric_code, Direction direction, std::vector<Anchor> anchors);

  [[nodiscard]] const std::string& metric_code() const noexcept { return metric_code_; }
  [[nodiscard]] Direction direction() const noexcept { return direction_; }
  [[nodiscard]] const std::vector<Anchor>& anchors() const noexcept { return anchors_; }

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;

 private:
  std::string metric_code_;
  Direction direction_;
  std::vector<Anchor> anchors_;
};

/// Parses "x1:e1,x2:e2,...". Throws ContractViolation on malformed text.
[[nodiscard]] std::vector<Anchor> parse_anchors(std::string_view text);
[[nodiscard]] std::string format_anchors(const std::vector<Anchor>& anchors);

/// Linear interpolation between anchors, clamped outside the anchor range.
[[nodiscard]] Preference evaluate_criterion(const CriterionSpec& spec, double x);

enum class RatingLevel { Unsatisfactory, Marginal, Satisfactory };

inline constexpr double kMarginalFloor = 0.40;
inline constexpr double kSatisfactoryFloor = 0.60;

/// [0, 0.4) unsatisfactory, [0.4, 0.6) marginal, [0.6, 1] satisfactory.
[[nodiscard]] RatingLevel classify_rating(Preference p) noexcept;

[[nodiscard]] std::string_view to_string(RatingLevel level) noexcept;

}  // namespace oodlsp
