#include "oodlsp/criteria.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace oodlsp {
namespace {

double parse_number(std::string_view text, std::string_view whole) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ContractViolation("criterion \"" + std::string(whole) + "\": '" + std::string(text) +
                            "' is not a number");
  }
  return value;
}

}  // namespace

CriterionSpec::CriterionSpec(std::string metric_code, Direction direction,
                             std::vector<Anchor> anchors)
    : metric_code_(std::move(metric_code)), direction_(direction), anchors_(std::move(anchors)) {
  const std::string where = "criterion for " + metric_code_ + ": ";
  if (anchors_.size() < 2) throw ContractViolation(where + "needs at least two anchors");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const Anchor& a = anchors_[i];
    if (!std::isfinite(a.x)) throw ContractViolation(where + "anchor x is not finite");
    if (!(a.eq >= 0.0 && a.eq <= 1.0)) throw ContractViolation(where + "anchor eq outside [0, 1]");
    if (i == 0) continue;
    const Anchor& prev = anchors_[i - 1];
    if (!(a.x > prev.x)) throw ContractViolation(where + "anchor x values must strictly increase");
    const bool ordered = direction_ == Direction::Increasing ? a.eq >= prev.eq : a.eq <= prev.eq;
    if (!ordered) throw ContractViolation(where + "anchor eq values not monotone in direction");
  }
  const double first = direction_ == Direction::Increasing ? 0.0 : 1.0;
  if (anchors_.front().eq != first || anchors_.back().eq != 1.0 - first) {
    throw ContractViolation(where + "outer anchors must map to 0 and 1");
  }
}

std::vector<Anchor> parse_anchors(std::string_view text) {
  std::vector<Anchor> anchors;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ContractViolation("criterion \"" + std::string(text) + "\": expected x:eq pairs");
    }
    anchors.push_back({parse_number(item.substr(0, colon), text),
                       parse_number(item.substr(colon + 1), text)});
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return anchors;
}

std::string format_anchors(const std::vector<Anchor>& anchors) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (i) out << ',';
    out << anchors[i].x << ':' << anchors[i].eq;
  }
  return out.str();
}

Preference evaluate_criterion(const CriterionSpec& spec, double x) {
  if (!std::isfinite(x)) {
    throw ContractViolation("criterion for " + spec.metric_code() + ": metric value not finite");
  }
  const auto& a = spec.anchors();
  if (x <= a.front().x) return Preference(a.front().eq);
  if (x >= a.back().x) return Preference(a.back().eq);
  std::size_t hi = 1;
  while (a[hi].x < x) ++hi;
  const Anchor& l = a[hi - 1];
  const Anchor& h = a[hi];
  if (x == h.x) return Preference(h.eq);
  const double t = (x - l.x) / (h.x - l.x);
  const double eq = l.eq + t * (h.eq - l.eq);
  return Preference(std::clamp(eq, std::min(l.eq, h.eq), std::max(l.eq, h.eq)));
}

RatingLevel classify_rating(Preference p) noexcept {
  if (p.value() >= kSatisfactoryFloor) return RatingLevel::Satisfactory;
  if (p.value() >= kMarginalFloor) return RatingLevel::Marginal;
  return RatingLevel::Unsatisfactory;
}

std::string_view to_string(RatingLevel level) noexcept {
  switch (level) {
    case RatingLevel::Unsatisfactory: return "unsatisfactory";
    case RatingLevel::Marginal: return "marginal";
    case RatingLevel::Satisfactory: return "satisfactory";
  }
  return "unknown";
}

}  // namespace oodlsp
