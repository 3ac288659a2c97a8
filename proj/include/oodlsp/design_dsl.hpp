#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oodlsp/design_model.hpp"

namespace oodlsp {

/// A diagnostic from the design-file parser. Positions are 1-based; columns
/// count UTF-8 code points.
struct ParseError {
  enum class Kind { Syntax, Semantic };

  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  std::string snippet;  // full text of the offending line
  Kind kind = Kind::Syntax;
};

struct DesignParseResult {
  std::optional<ClassModel> model;  // set iff errors is empty
  std::vector<ParseError> errors;

  [[nodiscard]] bool ok() const noexcept { return model.has_value(); }
};

/// Parses a `.ood` design document. Syntax errors are collected with
/// recovery at the next construct; if the syntax is clean the model is
/// validated and any violations are reported as Semantic errors.
[[nodiscard]] DesignParseResult parse_design(std::string_view text);

/// Canonical text: classes and their members in declaration order (attributes
/// before methods), then aggregation edges, then associations.
[[nodiscard]] std::string serialize_design(const ClassModel& model);

/// "file:line:col: error: message" followed by the snippet and a caret line.
[[nodiscard]] std::string format_diagnostic(const ParseError& error, std::string_view source_name);

}  // namespace oodlsp
