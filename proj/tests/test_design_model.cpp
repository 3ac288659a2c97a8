#include <doctest.h>

#include <algorithm>
#include <random>

#include "oodlsp/design_model.hpp"
#include "oracle/random_design.hpp"

using namespace oodlsp;

namespace {

ClassDecl cls(std::string name, std::vector<std::string> parents = {}) {
  ClassDecl c;
  c.name = std::move(name);
  c.parents = std::move(parents);
  return c;
}

bool has(const std::vector<Violation>& v, ViolationKind k) {
  return std::any_of(v.begin(), v.end(), [k](const Violation& x) { return x.kind == k; });
}

}  // namespace

TEST_CASE("empty model is valid") { CHECK(validate_design(ClassModel{}).empty()); }

TEST_CASE("two-class inheritance cycle names both classes") {
  ClassModel m;
  m.classes = {cls("A", {"B"}), cls("B", {"A"})};
  const auto v = validate_design(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::InheritanceCycle);
  CHECK(v[0].entities == std::vector<std::string>{"A", "B"});
}

TEST_CASE("self inheritance is a cycle") {
  ClassModel m;
  m.classes = {cls("A", {"A"})};
  CHECK(has(validate_design(m), ViolationKind::InheritanceCycle));
}

TEST_CASE("aggregation to an undeclared class") {
  ClassModel m;
  m.classes = {cls("Library")};
  m.aggregations = {{"Library", "Book"}};
  const auto v = validate_design(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::UnresolvedReference);
  CHECK(v[0].entities == std::vector<std::string>{"Book"});
}

TEST_CASE("aggregation cycle") {
  ClassModel m;
  m.classes = {cls("A"), cls("B"), cls("C")};
  m.aggregations = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
  const auto v = validate_design(m);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::AggregationCycle);
  CHECK(v[0].entities == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("duplicate names and empty parameter types") {
  ClassModel m;
  ClassDecl a = cls("A");
  a.attributes = {{"x", "int", Visibility::Private, false}};
  a.methods = {Method{"x", {}, Visibility::Public, false, false, false}};
  ClassDecl b = cls("B", {"A", "A"});
  b.methods = {Method{"f", {{"p", ""}}, Visibility::Public, false, false, false}};
  m.classes = {a, b, cls("A")};
  const auto v = validate_design(m);
  CHECK(has(v, ViolationKind::DuplicateClass));
  CHECK(has(v, ViolationKind::DuplicateMember));
  CHECK(has(v, ViolationKind::DuplicateParent));
  CHECK(has(v, ViolationKind::EmptyParameterType));
}

TEST_CASE("diamond multiple inheritance is valid") {
  ClassModel m;
  m.classes = {cls("Top"), cls("L", {"Top"}), cls("R", {"Top"}), cls("Bottom", {"L", "R"})};
  CHECK(validate_design(m).empty());
  CHECK(m.find("R") == 2u);
  CHECK_FALSE(m.find("Nope").has_value());
}

TEST_CASE("verdict does not depend on declaration order") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    ClassModel m = oracle::random_design(rng);
    if (!m.classes.empty() && i % 3 == 0) m.classes.front().parents.push_back(m.classes.back().name);
    auto kinds = [](const ClassModel& d) {
      std::vector<ViolationKind> out;
      for (const auto& v : validate_design(d)) out.push_back(v.kind);
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto before = kinds(m);
    std::shuffle(m.classes.begin(), m.classes.end(), rng);
    std::shuffle(m.aggregations.begin(), m.aggregations.end(), rng);
    CHECK(kinds(m) == before);
  }
}

TEST_CASE("generated designs are valid") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) CHECK(validate_design(oracle::random_design(rng)).empty());
}
