#include "oodlsp/design_model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace oodlsp {
namespace {

using Graph = std::vector<std::vector<std::size_t>>;

// Tarjan's strongly connected components; returns components that contain a
// cycle (size > 1, or a self loop).
std::vector<std::vector<std::size_t>> cyclic_components(const Graph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : g[v]) {
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<std::size_t> component;
    std::size_t w = 0;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      component.push_back(w);
    } while (w != v);
    const bool self_loop = std::find(g[v].begin(), g[v].end(), v) != g[v].end();
    if (component.size() > 1 || self_loop) out.push_back(std::move(component));
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnvisited) visit(v);
  }
  return out;
}

std::vector<std::string> names_of(const ClassModel& model, const std::vector<std::size_t>& ids) {
  std::vector<std::string> names;
  for (std::size_t id : ids) names.push_back(model.classes[id].name);
  std::sort(names.begin(), names.end());
  return names;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::optional<std::size_t> ClassModel::find(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<Violation> validate_design(const ClassModel& model) {
  std::vector<Violation> out;
  std::unordered_map<std::string, std::size_t> ids;

  for (std::size_t i = 0; i < model.classes.size(); ++i) {
    const ClassDecl& c = model.classes[i];
    if (!ids.emplace(c.name, i).second) {
      out.push_back({ViolationKind::DuplicateClass, {c.name}, "class '" + c.name + "' declared twice"});
    }
    std::set<std::string> members;
    auto member = [&](const std::string& name) {
      if (!members.insert(name).second) {
        out.push_back({ViolationKind::DuplicateMember, {c.name + "." + name},
                       "member '" + name + "' declared twice in class '" + c.name + "'"});
      }
    };
    for (const auto& a : c.attributes) member(a.name);
    for (const auto& m : c.methods) {
      member(m.name);
      for (const auto& p : m.parameters) {
        if (p.type.empty()) {
          out.push_back({ViolationKind::EmptyParameterType, {c.name + "." + m.name},
                         "parameter '" + p.name + "' of " + c.name + "." + m.name + " has no type"});
        }
      }
    }
    std::set<std::string> parents;
    for (const auto& p : c.parents) {
      if (!parents.insert(p).second) {
        out.push_back({ViolationKind::DuplicateParent, {c.name},
                       "class '" + c.name + "' lists parent '" + p + "' twice"});
      }
    }
  }

  auto resolve = [&](const std::string& name, const std::string& context) -> std::optional<std::size_t> {
    const auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    out.push_back({ViolationKind::UnresolvedReference, {name},
                   context + " refers to undeclared class '" + name + "'"});
    return std::nullopt;
  };

  Graph inheritance(model.classes.size());
  for (std::size_t i = 0; i < model.classes.size(); ++i) {
    const ClassDecl& c = model.classes[i];
    for (const auto& p : c.parents) {
      if (auto id = resolve(p, "class '" + c.name + "'")) inheritance[i].push_back(*id);
    }
  }
  Graph aggregation(model.classes.size());
  for (const auto& e : model.aggregations) {
    const std::string context = "aggregation " + e.whole + " o- " + e.part;
    const auto whole = resolve(e.whole, context);
    const auto part = resolve(e.part, context);
    if (whole && part) aggregation[*whole].push_back(*part);
  }
  for (const auto& e : model.associations) {
    const std::string context = "association " + e.first + " -- " + e.second;
    (void)resolve(e.first, context);
    (void)resolve(e.second, context);
  }

  for (const auto& cycle : cyclic_components(inheritance)) {
    auto names = names_of(model, cycle);
    out.push_back({ViolationKind::InheritanceCycle, names, "inheritance cycle among {" + join(names) + "}"});
  }
  for (const auto& cycle : cyclic_components(aggregation)) {
    auto names = names_of(model, cycle);
    out.push_back({ViolationKind::AggregationCycle, names, "aggregation cycle among {" + join(names) + "}"});
  }
  return out;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::DuplicateClass: return "duplicate-class";
    case ViolationKind::DuplicateMember: return "duplicate-member";
    case ViolationKind::DuplicateParent: return "duplicate-parent";
    case ViolationKind::EmptyParameterType: return "empty-parameter-type";
    case ViolationKind::UnresolvedReference: return "unresolved-reference";
    case ViolationKind::InheritanceCycle: return "inheritance-cycle";
    case ViolationKind::AggregationCycle: return "aggregation-cycle";
  }
  return "unknown";
}

}  // namespace oodlsp
