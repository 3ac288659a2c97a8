#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oodlsp/calibration.hpp"

namespace oodlsp {

/// Malformed CSV input; `line` is 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Direct elementary preferences, `design_id,node_code,eq`.
struct PreferenceTable {
  std::vector<std::string> designs;  // first-appearance order
  std::map<std::string, std::map<std::string, double>> inputs;  // design -> code -> eq
};

[[nodiscard]] PreferenceTable read_preference_csv(std::string_view text);

/// Calibration observations, `design_id,in1,...,ink,target`. When `arity` is
/// given the header must have exactly that many input columns.
[[nodiscard]] std::vector<BlockObservation> read_observations_csv(std::string_view text,
                                                                  std::optional<std::size_t> arity = std::nullopt);

}  // namespace oodlsp
