#include "oodlsp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace oodlsp {
namespace {

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

ReportDocument make_report(const ModelNode& model, const std::vector<DesignResult>& results) {
  ReportDocument doc;
  const auto factors = factor_nodes(model);
  for (const ModelNode* f : factors) doc.factors.push_back({f->code, f->name});
  for (const auto& [design, result] : results) {
    ReportRow row;
    row.design = design;
    for (const ModelNode* f : factors) {
      const Preference p = result.values.at(f->code);
      row.factors.push_back(p);
      row.factor_ratings.push_back(classify_rating(p));
    }
    row.global = result.global;
    row.global_rating = classify_rating(result.global);
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string format_percent(Preference p) {
  const long long hundredths = std::llround(p.value() * 10000.0);
  std::ostringstream out;
  out << hundredths / 100 << '.' << std::setw(2) << std::setfill('0') << hundredths % 100;
  return out.str();
}

std::string render_text(const ReportDocument& report) {
  std::vector<std::string> header{"Design"};
  for (const auto& f : report.factors) header.push_back(f.name);
  header.push_back("Global");
  header.push_back("Rating");

  std::vector<std::vector<std::string>> cells;
  for (const auto& row : report.rows) {
    std::vector<std::string> line{row.design};
    for (Preference p : row.factors) line.push_back(format_percent(p));
    line.push_back(format_percent(row.global));
    line.emplace_back(to_string(row.global_rating));
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    std::ostringstream row;
    for (std::size_t c = 0; c < line.size(); ++c) {
      // design and rating columns are text; everything else right-aligned
      const bool left = c == 0 || c + 1 == line.size();
      if (c) row << "  ";
      row << (left ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << line[c];
    }
    std::string text = row.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& line : cells) emit(line);
  return out.str();
}

std::string render_csv(const ReportDocument& report) {
  std::ostringstream out;
  out << "design_id,node_code,name,preference,percent,rating\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < report.factors.size(); ++i) {
      out << csv_field(row.design) << ',' << csv_field(report.factors[i].code) << ','
          << csv_field(report.factors[i].name) << ',' << shortest(row.factors[i].value()) << ','
          << format_percent(row.factors[i]) << ',' << to_string(row.factor_ratings[i]) << '\n';
    }
    out << csv_field(row.design) << ",global,Global," << shortest(row.global.value()) << ','
        << format_percent(row.global) << ',' << to_string(row.global_rating) << '\n';
  }
  return out.str();
}

}  // namespace oodlsp
