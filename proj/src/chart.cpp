#include <iomanip>
#include <sstream>

#include "oodlsp/report.hpp"

namespace oodlsp {
namespace {

constexpr double kTop = 40.0;
constexpr double kLeft = 60.0;
constexpr double kBarWidth = 60.0;
constexpr double kGap = 40.0;
constexpr double kBottomMargin = 60.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_chart(const std::vector<std::pair<std::string, Preference>>& globals) {
  if (globals.empty()) throw ContractViolation("render_chart: no designs to plot");

  const double n = static_cast<double>(globals.size());
  const double width = kLeft + n * (kBarWidth + kGap) + kGap;
  const double height = kTop + kChartPlotHeight + kBottomMargin;
  const double baseline = kTop + kChartPlotHeight;

  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>Global quality preference</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  out << "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int tick = 0; tick <= 100; tick += 20) {
    const double y = baseline - kChartPlotHeight * tick / 100.0;
    out << "    <line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << width - kGap / 2 << "\" y2=\"" << y
        << "\" stroke=\"#dddddd\"/>\n";
    out << "    <text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << tick << "</text>\n";
  }
  out << "    <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << baseline
      << "\" stroke=\"black\"/>\n";
  out << "    <line x1=\"" << kLeft << "\" y1=\"" << baseline << "\" x2=\"" << width - kGap / 2 << "\" y2=\""
      << baseline << "\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < globals.size(); ++i) {
    const auto& [name, pref] = globals[i];
    const double x = kLeft + kGap + static_cast<double>(i) * (kBarWidth + kGap);
    const double h = pref.value() * kChartPlotHeight;
    const double cx = x + kBarWidth / 2;
    out << "    <rect class=\"bar\" x=\"" << x << "\" y=\"" << baseline - h << "\" width=\"" << kBarWidth
        << "\" height=\"" << h << "\" fill=\"#4a78b0\"><title>" << xml_escape(name) << ": " << format_percent(pref)
        << "</title></rect>\n";
    out << "    <text x=\"" << cx << "\" y=\"" << baseline - h - 6 << "\" text-anchor=\"middle\">"
        << format_percent(pref) << "</text>\n";
    out << "    <text x=\"" << cx << "\" y=\"" << baseline + 18 << "\" text-anchor=\"middle\">" << xml_escape(name)
        << "</text>\n";
  }
  out << "    <text x=\"" << kLeft / 3 << "\" y=\"" << kTop + kChartPlotHeight / 2 << "\" transform=\"rotate(-90 "
      << kLeft / 3 << ' ' << kTop + kChartPlotHeight / 2 << ")\" text-anchor=\"middle\">Global preference (%)</text>\n";
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace oodlsp
