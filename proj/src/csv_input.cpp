#include "oodlsp/csv_input.hpp"

#include <charconv>

namespace oodlsp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    line.remove_prefix(comma + 1);
  }
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> rows_of(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> rows;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') rows.emplace_back(number, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return rows;
}

double preference_cell(std::string_view cell, std::size_t line, std::string_view column) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || end != cell.data() + cell.size() || cell.empty()) {
    throw InputError(line, "column " + std::string(column) + ": '" + std::string(cell) + "' is not a number");
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(line, "column " + std::string(column) + ": " + std::string(cell) + " is outside [0, 1]");
  }
  return v;
}

}  // namespace

PreferenceTable read_preference_csv(std::string_view text) {
  const auto rows = rows_of(text);
  if (rows.empty()) throw InputError(1, "empty preference file; expected header design_id,node_code,eq");
  const auto header = split(rows.front().second);
  if (header.size() != 3 || header[0] != "design_id" || header[1] != "node_code" || header[2] != "eq") {
    throw InputError(rows.front().first, "expected header design_id,node_code,eq");
  }
  PreferenceTable table;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto [line, row] = rows[r];
    const auto cells = split(row);
    if (cells.size() != 3) throw InputError(line, "expected 3 columns, found " + std::to_string(cells.size()));
    if (cells[0].empty() || cells[1].empty()) throw InputError(line, "empty design_id or node_code");
    const std::string design(cells[0]);
    if (!table.inputs.count(design)) table.designs.push_back(design);
    auto& codes = table.inputs[design];
    if (!codes.emplace(std::string(cells[1]), preference_cell(cells[2], line, "eq")).second) {
      throw InputError(line, "duplicate entry for " + design + " / " + std::string(cells[1]));
    }
  }
  return table;
}

std::vector<BlockObservation> read_observations_csv(std::string_view text, std::optional<std::size_t> arity) {
  const auto rows = rows_of(text);
  if (rows.empty()) throw InputError(1, "empty observations file; expected header design_id,in1,...,ink,target");
  const auto header = split(rows.front().second);
  const std::size_t k = header.size() < 2 ? 0 : header.size() - 2;
  bool ok = header.size() >= 3 && header.front() == "design_id" && header.back() == "target";
  for (std::size_t i = 0; ok && i < k; ++i) ok = header[i + 1] == "in" + std::to_string(i + 1);
  if (!ok) throw InputError(rows.front().first, "expected header design_id,in1,...,ink,target");
  if (arity && *arity != k) {
    throw InputError(rows.front().first,
                     "header has " + std::to_string(k) + " inputs but arity " + std::to_string(*arity) + " was requested");
  }

  std::vector<BlockObservation> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto [line, row] = rows[r];
    const auto cells = split(row);
    if (cells.size() != k + 2) {
      throw InputError(line, "expected " + std::to_string(k + 2) + " columns, found " + std::to_string(cells.size()));
    }
    BlockObservation o;
    o.id = std::string(cells[0]);
    for (std::size_t i = 0; i < k; ++i) o.inputs.emplace_back(preference_cell(cells[i + 1], line, header[i + 1]));
    o.target = Preference(preference_cell(cells.back(), line, "target"));
    out.push_back(std::move(o));
  }
  if (out.empty()) throw InputError(rows.back().first, "no observations after the header");
  return out;
}

}  // namespace oodlsp
