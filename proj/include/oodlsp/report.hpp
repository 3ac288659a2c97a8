#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oodlsp/criteria.hpp"
#include "oodlsp/quality_model.hpp"

namespace oodlsp {

struct ReportRow {
  std::string design;
  std::vector<Preference> factors;  // same order as ReportDocument::factors
  std::vector<RatingLevel> factor_ratings;
  Preference global;
  RatingLevel global_rating = RatingLevel::Unsatisfactory;
};

struct FactorColumn {
  std::string code;
  std::string name;
};

struct ReportDocument {
  std::vector<FactorColumn> factors;
  std::vector<ReportRow> rows;
};

using DesignResult = std::pair<std::string, EvaluationResult>;

[[nodiscard]] ReportDocument make_report(const ModelNode& model, const std::vector<DesignResult>& results);

/// Percentage with two decimals, rounded half-up: 0.77191 -> "77.19".
[[nodiscard]] std::string format_percent(Preference p);

/// Aligned plain-text table, one row per design.
[[nodiscard]] std::string render_text(const ReportDocument& report);

/// Long-form CSV: design_id,node_code,name,preference,percent,rating. Each
/// design gets one row per factor and a final row with node_code "global".
[[nodiscard]] std::string render_csv(const ReportDocument& report);

/// Self-contained SVG bar chart of global preferences on a 0-100 axis.
/// Throws ContractViolation when `globals` is empty.
[[nodiscard]] std::string render_chart(const std::vector<std::pair<std::string, Preference>>& globals);

/// Plot-area height in SVG user units; a bar's height is preference * this.
inline constexpr double kChartPlotHeight = 400.0;

}  // namespace oodlsp
