#include "oodlsp/metrics.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <vector>

#include "oodlsp/preference.hpp"

namespace oodlsp {
namespace {

constexpr std::array<std::string_view, kMetricCount> kCodes = {
    "NOC", "NOH", "NOA", "MDIT", "CAM", "NOP", "CIS", "DAR", "NAR", "NAH", "FA", "DCC", "NOM", "EOD",
};

using Signature = std::pair<std::string, std::vector<std::string>>;

Signature signature_of(const Method& m) {
  Signature s{m.name, {}};
  for (const auto& p : m.parameters) s.second.push_back(p.type);
  return s;
}

double mean_or(double sum, std::size_t count, double fallback) {
  return count == 0 ? fallback : sum / static_cast<double>(count);
}

// Inheritance structure with every class's transitive ancestors and depth.
struct Hierarchy {
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::size_t>> ancestors;  // sorted, no duplicates
  std::vector<int> depth;

  Hierarchy(const ClassModel& model, const std::unordered_map<std::string, std::size_t>& ids) {
    const std::size_t n = model.classes.size();
    parents.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& p : model.classes[i].parents) parents[i].push_back(ids.at(p));
    }
    ancestors.resize(n);
    depth.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) resolve(i);
  }

  void resolve(std::size_t c) {
    if (depth[c] != 0) return;
    std::set<std::size_t> acc;
    int d = 1;
    for (std::size_t p : parents[c]) {
      resolve(p);
      acc.insert(p);
      acc.insert(ancestors[p].begin(), ancestors[p].end());
      d = std::max(d, depth[p] + 1);
    }
    ancestors[c].assign(acc.begin(), acc.end());
    depth[c] = d;
  }
};

}  // namespace

std::string_view to_string(MetricCode code) noexcept { return kCodes[static_cast<std::size_t>(code)]; }

std::optional<MetricCode> parse_metric_code(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == text) return static_cast<MetricCode>(i);
  }
  return std::nullopt;
}

MetricVector compute_metrics(const ClassModel& model) {
  if (const auto violations = validate_design(model); !violations.empty()) {
    throw ContractViolation("compute_metrics: invalid design: " + violations.front().message);
  }

  const std::size_t n = model.classes.size();
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) ids.emplace(model.classes[i].name, i);
  const Hierarchy h(model, ids);

  std::vector<bool> has_children(n, false);
  for (const auto& ps : h.parents) {
    for (std::size_t p : ps) has_children[p] = true;
  }

  std::vector<std::set<std::size_t>> coupled(n);
  auto couple_type = [&](std::size_t self, const std::string& type) {
    const auto it = ids.find(type);
    if (it != ids.end() && it->second != self) coupled[self].insert(it->second);
  };
  for (const auto& e : model.aggregations) {
    const std::size_t w = ids.at(e.whole), p = ids.at(e.part);
    if (w != p) {
      coupled[w].insert(p);
      coupled[p].insert(w);
    }
  }
  for (const auto& e : model.associations) {
    const std::size_t a = ids.at(e.first), b = ids.at(e.second);
    if (a != b) {
      coupled[a].insert(b);
      coupled[b].insert(a);
    }
  }

  std::size_t hierarchies = 0, max_depth = 0, dar_classes = 0, fa_classes = 0;
  std::size_t documented = 0, documentable = 0;
  double ancestors = 0, cam = 0, polymorphic = 0, public_methods = 0, dar = 0, fa = 0,
         coupling = 0, methods = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const ClassDecl& c = model.classes[i];
    if (h.parents[i].empty() && has_children[i]) ++hierarchies;
    max_depth = std::max<std::size_t>(max_depth, static_cast<std::size_t>(h.depth[i]));
    ancestors += static_cast<double>(h.ancestors[i].size());

    // Signatures visible from ancestors; private methods are not inherited.
    std::set<Signature> ancestor_all, ancestor_inheritable;
    for (std::size_t a : h.ancestors[i]) {
      for (const auto& m : model.classes[a].methods) {
        ancestor_all.insert(signature_of(m));
        if (m.visibility != Visibility::Private) ancestor_inheritable.insert(signature_of(m));
      }
    }

    std::set<std::string> class_types;
    double type_sum = 0;
    std::set<Signature> own;
    for (const auto& m : c.methods) {
      std::set<std::string> types;
      for (const auto& p : m.parameters) {
        types.insert(p.type);
        couple_type(i, p.type);
      }
      class_types.insert(types.begin(), types.end());
      type_sum += static_cast<double>(types.size());

      const Signature sig = signature_of(m);
      own.insert(sig);
      if (m.is_virtual || ancestor_all.count(sig)) polymorphic += 1;
      if (m.visibility == Visibility::Public) public_methods += 1;
    }
    cam += (c.methods.empty() || class_types.empty())
               ? 1.0
               : type_sum / static_cast<double>(c.methods.size() * class_types.size());
    methods += static_cast<double>(c.methods.size());

    if (!c.attributes.empty()) {
      const auto hidden = std::count_if(c.attributes.begin(), c.attributes.end(), [](const Attribute& a) {
        return a.visibility != Visibility::Public;
      });
      dar += static_cast<double>(hidden) / static_cast<double>(c.attributes.size());
      ++dar_classes;
    }
    for (const auto& a : c.attributes) couple_type(i, a.type);

    std::size_t inherited = 0;
    for (const auto& sig : ancestor_inheritable) inherited += own.count(sig) ? 0 : 1;
    if (inherited + c.methods.size() > 0) {
      fa += static_cast<double>(inherited) / static_cast<double>(inherited + c.methods.size());
      ++fa_classes;
    }

    documentable += 1 + c.attributes.size() + c.methods.size();
    documented += c.documented ? 1 : 0;
    for (const auto& a : c.attributes) documented += a.documented ? 1 : 0;
    for (const auto& m : c.methods) documented += m.documented ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) coupling += static_cast<double>(coupled[i].size());

  // Aggregation hierarchies: wholes that are never a part.
  std::set<std::string> wholes, parts;
  for (const auto& e : model.aggregations) {
    wholes.insert(e.whole);
    parts.insert(e.part);
  }
  std::size_t agg_roots = 0;
  for (const auto& w : wholes) agg_roots += parts.count(w) ? 0 : 1;

  MetricVector v;
  v[MetricCode::NOC] = static_cast<double>(n);
  v[MetricCode::NOH] = static_cast<double>(hierarchies);
  v[MetricCode::NOA] = mean_or(ancestors, n, 0.0);
  v[MetricCode::MDIT] = static_cast<double>(max_depth);
  v[MetricCode::CAM] = mean_or(cam, n, 1.0);
  v[MetricCode::NOP] = mean_or(polymorphic, n, 0.0);
  v[MetricCode::CIS] = mean_or(public_methods, n, 0.0);
  v[MetricCode::DAR] = mean_or(dar, dar_classes, 1.0);
  v[MetricCode::NAR] = static_cast<double>(model.aggregations.size());
  v[MetricCode::NAH] = static_cast<double>(agg_roots);
  v[MetricCode::FA] = mean_or(fa, fa_classes, 1.0);
  v[MetricCode::DCC] = mean_or(coupling, n, 0.0);
  v[MetricCode::NOM] = mean_or(methods, n, 0.0);
  v[MetricCode::EOD] = mean_or(static_cast<double>(documented), documentable, 1.0);
  return v;
}

}  // namespace oodlsp
