#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "oodlsp/aggregate.hpp"
#include "oodlsp/csv_input.hpp"
#include "oodlsp/quality_model.hpp"
#include "support.hpp"

using namespace oodlsp;
using test_support::load_model;
using test_support::read_text;

namespace {

const ModelNode* find_node(const ModelNode& n, const std::string& code) {
  if (n.code == code) return &n;
  for (const auto& c : n.children) {
    if (const auto* hit = find_node(c, code)) return hit;
  }
  return nullptr;
}

std::map<std::string, double> design_inputs(const std::string& csv, const std::string& design) {
  return read_preference_csv(read_text(csv)).inputs.at(design);
}

void check_reaggregation(const ModelNode& n, const EvaluationResult& r) {
  if (n.is_leaf()) return;
  std::vector<Preference> kids;
  std::vector<double> weights;
  for (const auto& c : n.children) {
    kids.push_back(r.values.at(c.code));
    weights.push_back(c.weight);
    check_reaggregation(c, r);
  }
  const double again = aggregate(kids, WeightVector(weights, kModelWeightTolerance), *n.op).value();
  CHECK(std::abs(again - r.values.at(n.code).value()) <= 1e-9);
}

}  // namespace

TEST_CASE("functionality subtree of LMS-1") {
  const ModelNode m = load_model("models/paper-functionality.model");
  const auto r = evaluate(m, design_inputs("tables/table2.csv", "LMS-1"), InputMode::Preferences);
  CHECK(std::abs(r.global.value() - 0.7719) <= 0.0005);
  CHECK(r.values.at("1").value() == r.global.value());
  CHECK(r.ratings.at("1") == RatingLevel::Satisfactory);
}

TEST_CASE("paper-faithful model reproduces the published block columns") {
  const ModelNode m = load_model("models/paper-faithful.model");
  struct Expect {
    const char* design;
    double functionality, understandability, reusability;
  };
  const Expect rows[] = {
      {"LMS-1", 0.7719, 0.9177, 0.8606},
      {"LMS-2", 0.7354, 0.8160, 0.8012},
      {"LMS-3", 0.6969, 0.7108, 0.7397},
      {"HRIS", -1.0, 0.8579, 0.8875},
  };
  for (const auto& e : rows) {
    CAPTURE(e.design);
    const auto r = evaluate(m, design_inputs("tables/elementary-all.csv", e.design), InputMode::Preferences);
    if (e.functionality >= 0) CHECK(std::abs(r.values.at("1").value() - e.functionality) <= 0.0005);
    CHECK(std::abs(r.values.at("3").value() - e.understandability) <= 0.0005);
    CHECK(std::abs(r.values.at("4").value() - e.reusability) <= 0.0005);
    check_reaggregation(m, r);
  }
}

TEST_CASE("understandability block of LMS-2 from inline model") {
  const auto parsed = parse_model(R"(
node "Understandability" code=3 weight=1 op=C-- {
  node "DAR" code=3.1 weight=0.30 criterion="0:0,1:1" direction=inc
  node "CAM" code=3.2 weight=0.40 criterion="0:0,1:1" direction=inc
  node "NOP" code=3.4 weight=0.30 criterion="0:0,1:1" direction=inc
}
)");
  REQUIRE(parsed.ok());
  const auto r = evaluate(*parsed.root, {{"3.1", 0.8}, {"3.2", 0.7}, {"3.4", 1.0}}, InputMode::Preferences);
  CHECK(std::abs(r.global.value() - 0.8160) <= 0.0005);
}

TEST_CASE("single leaf model passes its input through") {
  const auto parsed = parse_model(R"(node "Only" code=1 weight=1 criterion="0:0,1:1" direction=inc)");
  REQUIRE(parsed.ok());
  CHECK(evaluate(*parsed.root, {{"1", 0.42}}, InputMode::Preferences).global.value() == 0.42);
}

TEST_CASE("five-factor global block") {
  const ModelNode m = load_model("models/global-block.model");
  const auto r = evaluate(m, {{"1", 0.7719}, {"2", 0.72}, {"3", 0.9177}, {"4", 0.8606}, {"5", 0.6854}},
                          InputMode::Preferences);
  CHECK(std::abs(r.global.value() - 0.7889) <= 0.001);
  CHECK(factor_nodes(m).size() == 5);
  CHECK(r.ratings.size() == 5);
}

TEST_CASE("model files parse and classify") {
  for (const char* path : {"models/paper-faithful.model", "models/figure1-full.model", "models/global-block.model",
                           "models/paper-functionality.model"}) {
    CAPTURE(path);
    CHECK_NOTHROW((void)load_model(path));
  }
  const ModelNode m = load_model("models/paper-faithful.model");
  CHECK(m.kind == NodeKind::Global);
  CHECK(find_node(m, "3")->kind == NodeKind::Factor);
  CHECK(find_node(m, "3.2")->kind == NodeKind::SubCharacteristic);
  CHECK(find_node(m, "3.2.1")->kind == NodeKind::MetricLeaf);
  CHECK(find_node(m, "5")->children.size() == 8);
  CHECK(leaf_nodes(m).size() == 29);
}

TEST_CASE("model errors") {
  SUBCASE("weights must sum to one") {
    const auto r = parse_model(R"(node "F" code=1 weight=1 op=C-- {
  node "a" code=1.1 weight=0.30 criterion="0:0,1:1" direction=inc
  node "b" code=1.2 weight=0.30 criterion="0:0,1:1" direction=inc
  node "c" code=1.3 weight=0.30 criterion="0:0,1:1" direction=inc
})");
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("node 1") != std::string::npos);
    CHECK(r.errors.front().line == 1);
  }
  SUBCASE("empty document") {
    const auto r = parse_model("  # nothing here\n");
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().line == 1);
    CHECK(r.errors.front().column == 1);
  }
  SUBCASE("unknown operator") {
    const auto r = parse_model(R"(node "F" code=1 weight=1 op=C--- {
  node "a" code=1.1 weight=1 criterion="0:0,1:1" direction=inc
})");
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("C---") != std::string::npos);
  }
  SUBCASE("duplicate code") {
    const auto r = parse_model(R"(node "F" code=1 weight=1 op=A {
  node "a" code=1.1 weight=0.5 criterion="0:0,1:1" direction=inc
  node "b" code=1.1 weight=0.5 criterion="0:0,1:1" direction=inc
})");
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().line == 3);
  }
  SUBCASE("leaf without criterion") {
    const auto r = parse_model(R"(node "F" code=1 weight=1 op=A {
  node "a" code=1.1 weight=1
})");
    REQUIRE_FALSE(r.ok());
  }
  SUBCASE("non-leaf without operator") {
    const auto r = parse_model(R"(node "F" code=1 weight=1 {
  node "a" code=1.1 weight=1 criterion="0:0,1:1" direction=inc
})");
    REQUIRE_FALSE(r.ok());
  }
}

TEST_CASE("evaluation errors") {
  const ModelNode m = load_model("models/paper-functionality.model");
  auto inputs = design_inputs("tables/table2.csv", "LMS-1");
  inputs.erase("1.3.1");
  try {
    (void)evaluate(m, inputs, InputMode::Preferences);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("1.3.1") != std::string::npos);
  }
  inputs["1.3.1"] = 1.2;
  CHECK_THROWS_AS((void)evaluate(m, inputs, InputMode::Preferences), ContractViolation);
}

TEST_CASE("metric mode maps raw values through criteria") {
  const ModelNode m = load_model("models/paper-functionality.model");
  const auto r = evaluate(m, {{"1.1.1", 8}, {"1.2.1", 2}, {"1.3.1", 0.8}, {"1.4.1", 3}, {"1.5.1", 7}},
                          InputMode::MetricValues);
  CHECK(r.values.at("1.2.1").value() == doctest::Approx(0.4));
  CHECK(r.values.at("1.5.1").value() == doctest::Approx(0.7));
  CHECK(std::abs(r.global.value() - 0.7719) <= 0.0005);
}

TEST_CASE("raising a leaf never lowers an ancestor") {
  const ModelNode m = load_model("models/paper-faithful.model");
  const auto leaves = leaf_nodes(m);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<std::string, double> in;
    for (const auto* l : leaves) in[l->code] = unit(rng) < 0.1 ? 0.0 : unit(rng);
    const auto base = evaluate(m, in, InputMode::Preferences);
    if (trial % 30 == 0) check_reaggregation(m, base);
    const auto* l = leaves[rng() % leaves.size()];
    in[l->code] += (1.0 - in[l->code]) * unit(rng);
    const auto raised = evaluate(m, in, InputMode::Preferences);
    for (const auto& [code, v] : base.values) REQUIRE(raised.values.at(code).value() >= v.value() - 1e-12);
  }
}
