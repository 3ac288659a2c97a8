#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oodlsp {

enum class Visibility { Public, Private, Protected };

struct Attribute {
  std::string name;
  std::string type;
  Visibility visibility = Visibility::Private;
  bool documented = false;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Parameter {
  std::string name;
  std::string type;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct Method {
  std::string name;
  std::vector<Parameter> parameters;
  Visibility visibility = Visibility::Public;
  bool is_virtual = false;
  // As written in the source. Metrics recompute overriding from signatures.
  bool declared_override = false;
  bool documented = false;

  friend bool operator==(const Method&, const Method&) = default;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> parents;
  std::vector<Attribute> attributes;
  std::vector<Method> methods;
  bool documented = false;

  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct Aggregation {
  std::string whole;
  std::string part;

  friend bool operator==(const Aggregation&, const Aggregation&) = default;
};

struct Association {
  std::string first;
  std::string second;

  friend bool operator==(const Association&, const Association&) = default;
};

/// An object-oriented design: classes plus the aggregation and association
/// edges between them. Classes are referenced by name.
struct ClassModel {
  std::vector<ClassDecl> classes;
  std::vector<Aggregation> aggregations;
  std::vector<Association> associations;

  [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const ClassModel&, const ClassModel&) = default;
};

enum class ViolationKind {
  DuplicateClass,
  DuplicateMember,
  DuplicateParent,
  EmptyParameterType,
  UnresolvedReference,
  InheritanceCycle,
  AggregationCycle,
};

struct Violation {
  ViolationKind kind;
  // Offending entities: class names, or "Class.member" for members. Cycles
  // list every class on the cycle, sorted.
  std::vector<std::string> entities;
  std::string message;
};

/// Empty result means the model is valid.
[[nodiscard]] std::vector<Violation> validate_design(const ClassModel& model);

[[nodiscard]] std::string_view to_string(ViolationKind kind) noexcept;

}  // namespace oodlsp
