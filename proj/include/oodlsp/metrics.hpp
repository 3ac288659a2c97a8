#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "oodlsp/design_model.hpp"

namespace oodlsp {

/// The fourteen design metrics, in hierarchical-model order.
enum class MetricCode : int {
  NOC,   // number of classes
  NOH,   // number of inheritance hierarchies
  NOA,   // mean number of ancestors
  MDIT,  // maximum depth of inheritance, in levels (root = 1)
  CAM,   // cohesion among methods of class
  NOP,   // mean polymorphic methods per class
  CIS,   // mean public methods per class
  DAR,   // data access ratio
  NAR,   // aggregation relationships
  NAH,   // aggregation hierarchies
  FA,    // functional abstraction
  DCC,   // mean direct class coupling
  NOM,   // mean methods per class
  EOD,   // extent of documentation
};

inline constexpr std::size_t kMetricCount = 14;

inline constexpr std::array<MetricCode, kMetricCount> kAllMetrics = {
    MetricCode::NOC, MetricCode::NOH, MetricCode::NOA, MetricCode::MDIT, MetricCode::CAM,
    MetricCode::NOP, MetricCode::CIS, MetricCode::DAR, MetricCode::NAR, MetricCode::NAH,
    MetricCode::FA,  MetricCode::DCC, MetricCode::NOM, MetricCode::EOD,
};

[[nodiscard]] std::string_view to_string(MetricCode code) noexcept;
[[nodiscard]] std::optional<MetricCode> parse_metric_code(std::string_view text) noexcept;

class MetricVector {
 public:
  [[nodiscard]] double operator[](MetricCode code) const noexcept {
    return values_[static_cast<std::size_t>(code)];
  }
  double& operator[](MetricCode code) noexcept { return values_[static_cast<std::size_t>(code)]; }

  friend bool operator==(const MetricVector&, const MetricVector&) = default;

 private:
  std::array<double, kMetricCount> values_{};
};

/// Computes every metric of `model`. Throws ContractViolation when the model
/// fails validate_design().
[[nodiscard]] MetricVector compute_metrics(const ClassModel& model);

}  // namespace oodlsp
