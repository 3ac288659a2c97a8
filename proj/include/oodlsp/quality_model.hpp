#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oodlsp/criteria.hpp"
#include "oodlsp/gcd_operator.hpp"
#include "oodlsp/metrics.hpp"
#include "oodlsp/preference.hpp"

namespace oodlsp {

enum class NodeKind { Global, Factor, SubCharacteristic, MetricLeaf };

inline constexpr double kModelWeightTolerance = 1e-6;
/// Root code that marks a global model; its children are the factors.
inline constexpr std::string_view kGlobalCode = "0";

/// One node of the hierarchical quality model. Non-leaf nodes aggregate
/// their children with `op`; leaves carry the elementary criterion.
struct ModelNode {
  std::string code;
  std::string name;
  NodeKind kind = NodeKind::MetricLeaf;
  double weight = 1.0;
  std::optional<GcdSymbol> op;
  std::vector<ModelNode> children;
  std::optional<CriterionSpec> criterion;
  std::optional<MetricCode> metric;

  [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }
};

struct ModelError {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
};

struct ModelParseResult {
  std::optional<ModelNode> root;  // set iff errors is empty
  std::vector<ModelError> errors;

  [[nodiscard]] bool ok() const noexcept { return root.has_value(); }
};

/// Parses the indented block format:
///
///   node "<name>" code=<dotted> weight=<real> [op=<symbol>]
///        [criterion="x:e,..." direction=inc|dec metric=<CODE>] { children }
///
/// and validates structure, weights, operators and code uniqueness.
[[nodiscard]] ModelParseResult parse_model(std::string_view text);

/// Nodes whose preferences are reported as factors: the children of a global
/// root, or the root itself otherwise.
[[nodiscard]] std::vector<const ModelNode*> factor_nodes(const ModelNode& root);

/// Every leaf, in document order.
[[nodiscard]] std::vector<const ModelNode*> leaf_nodes(const ModelNode& root);

enum class InputMode {
  MetricValues,  // leaf inputs are raw metric values, mapped through criteria
  Preferences,   // leaf inputs are elementary preferences, criteria skipped
};

/// Missing or unusable evaluation input.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluationResult {
  std::map<std::string, Preference> values;  // every node, keyed by code
  Preference global;
  std::map<std::string, RatingLevel> ratings;  // per factor code
};

/// Bottom-up aggregation. `inputs` maps leaf codes to metric values or
/// preferences according to `mode`.
[[nodiscard]] EvaluationResult evaluate(const ModelNode& model,
                                        const std::map<std::string, double>& inputs,
                                        InputMode mode);

/// Full pipeline: each leaf reads its bound metric from `metrics`.
[[nodiscard]] EvaluationResult evaluate(const ModelNode& model, const MetricVector& metrics);

[[nodiscard]] std::string_view to_string(NodeKind kind) noexcept;

}  // namespace oodlsp
