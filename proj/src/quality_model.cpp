#include "oodlsp/quality_model.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "oodlsp/aggregate.hpp"

namespace oodlsp {
namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class T { Word, String, Equals, LBrace, RBrace, End, Bad };

struct Token {
  T kind = T::End;
  std::string text;
  Pos pos;
};

std::vector<Token> lex(std::string_view text, std::vector<ModelError>& errors) {
  std::vector<Token> out;
  Pos p;
  std::size_t i = 0;
  auto step = [&] {
    const unsigned char c = static_cast<unsigned char>(text[i++]);
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++p.column;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      step();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') step();
      continue;
    }
    Token t;
    t.pos = p;
    if (c == '=' || c == '{' || c == '}') {
      t.kind = c == '=' ? T::Equals : c == '{' ? T::LBrace : T::RBrace;
      t.text = std::string(1, c);
      step();
    } else if (c == '"') {
      t.kind = T::String;
      step();
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        t.text.push_back(text[i]);
        step();
      }
      if (i < text.size() && text[i] == '"') {
        step();
      } else {
        errors.push_back({t.pos.line, t.pos.column, "unterminated string"});
        t.kind = T::Bad;
      }
    } else {
      t.kind = T::Word;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '=' && text[i] != '{' && text[i] != '}' && text[i] != '"' && text[i] != '#') {
        t.text.push_back(text[i]);
        step();
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = T::End;
  end.pos = out.empty() ? Pos{} : out.back().pos;
  out.push_back(end);
  return out;
}

struct Failure {
  Pos pos;
  std::string message;
};

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_code_syntax(const std::string& code) {
  if (code.empty() || code.front() == '.' || code.back() == '.') return false;
  bool prev_dot = false;
  for (char c : code) {
    if (c == '.') {
      if (prev_dot) return false;
      prev_dot = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    } else {
      prev_dot = false;
    }
  }
  return true;
}

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) : toks_(lex(text, errors_)) {}

  ModelParseResult run() {
    ModelParseResult result;
    if (!errors_.empty()) {
      result.errors = std::move(errors_);
      return result;
    }
    try {
      if (toks_.front().kind == T::End) throw Failure{{1, 1}, "empty model: expected 'node'"};
      ModelNode root = node();
      if (cur().kind != T::End) throw Failure{cur().pos, "expected end of document after the root node"};
      validate(root, nullptr);
      if (errors_.empty()) {
        classify(root, 0, root.code == kGlobalCode);
        result.root = std::move(root);
      }
    } catch (const Failure& f) {
      errors_.push_back({f.pos.line, f.pos.column, f.message});
    }
    result.errors = std::move(errors_);
    return result;
  }

 private:
  const Token& cur() const { return toks_[k_]; }
  const Token& take() { return toks_[k_ + 1 < toks_.size() ? k_++ : k_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = cur().kind == T::End ? "end of input" : "'" + cur().text + "'";
    throw Failure{cur().pos, "expected " + expected + ", found " + found};
  }

  void error(Pos pos, std::string message) { errors_.push_back({pos.line, pos.column, std::move(message)}); }

  ModelNode node() {
    if (cur().kind != T::Word || cur().text != "node") fail("'node'");
    const Pos node_pos = take().pos;
    if (cur().kind != T::String) fail("quoted node name");
    ModelNode n;
    n.name = take().text;

    std::map<std::string, std::pair<std::string, Pos>> attrs;
    while (cur().kind == T::Word && cur().text != "node") {
      const Token key = take();
      if (cur().kind != T::Equals) fail("'=' after '" + key.text + "'");
      take();
      if (cur().kind != T::Word && cur().kind != T::String) fail("value for '" + key.text + "'");
      const Token value = take();
      if (!attrs.emplace(key.text, std::make_pair(value.text, value.pos)).second) {
        throw Failure{key.pos, "attribute '" + key.text + "' given twice"};
      }
    }

    const auto get = [&](const std::string& k) -> const std::pair<std::string, Pos>* {
      const auto it = attrs.find(k);
      return it == attrs.end() ? nullptr : &it->second;
    };
    for (const auto& [k, v] : attrs) {
      static const std::set<std::string> kKnown = {"code", "weight", "op", "criterion", "direction", "metric"};
      if (!kKnown.count(k)) error(v.second, "unknown attribute '" + k + "'");
    }

    const auto* code = get("code");
    if (!code) throw Failure{node_pos, "node \"" + n.name + "\" has no code"};
    n.code = code->first;
    if (!valid_code_syntax(n.code)) error(code->second, "malformed code '" + n.code + "' (expected e.g. 1.3.1)");
    pos_[n.code] = node_pos;

    if (const auto* w = get("weight")) {
      const auto v = to_number(w->first);
      if (!v || !(*v > 0.0 && *v <= 1.0)) {
        error(w->second, "node " + n.code + ": weight '" + w->first + "' must be a number in (0, 1]");
      } else {
        n.weight = *v;
      }
    }
    if (const auto* op = get("op")) {
      n.op = parse_gcd_symbol(op->first);
      if (!n.op) error(op->second, "node " + n.code + ": unknown operator '" + op->first + "'");
      op_given_.insert(n.code);
    }
    if (const auto* m = get("metric")) {
      n.metric = parse_metric_code(m->first);
      if (!n.metric) error(m->second, "node " + n.code + ": unknown metric '" + m->first + "'");
    }
    Direction direction = Direction::Increasing;
    if (const auto* d = get("direction")) {
      if (d->first == "inc") {
        direction = Direction::Increasing;
      } else if (d->first == "dec") {
        direction = Direction::Decreasing;
      } else {
        error(d->second, "node " + n.code + ": direction must be 'inc' or 'dec'");
      }
    }
    if (const auto* c = get("criterion")) {
      try {
        n.criterion.emplace(n.metric ? std::string(to_string(*n.metric)) : n.code, direction,
                            parse_anchors(c->first));
      } catch (const ContractViolation& e) {
        error(c->second, "node " + n.code + ": " + e.what());
      }
      criterion_given_.insert(n.code);
    }

    if (cur().kind == T::LBrace) {
      const Pos brace = take().pos;
      while (cur().kind != T::RBrace) {
        if (cur().kind == T::End) fail("'}' closing node " + n.code);
        n.children.push_back(node());
      }
      take();
      if (n.children.empty()) error(brace, "node " + n.code + " has an empty child block");
    }
    return n;
  }

  void validate(const ModelNode& n, const ModelNode* parent) {
    const Pos at = pos_[n.code];
    if (!codes_.insert(n.code).second) error(at, "duplicate code '" + n.code + "'");
    if (parent) {
      const bool global_parent = parent->code == kGlobalCode;
      const std::string prefix = global_parent ? "" : parent->code + ".";
      const std::string tail = n.code.substr(std::min(prefix.size(), n.code.size()));
      if (n.code.compare(0, prefix.size(), prefix) != 0 || tail.empty() ||
          tail.find('.') != std::string::npos) {
        error(at, "code '" + n.code + "' is not a direct child code of '" + parent->code + "'");
      }
    }

    if (n.is_leaf()) {
      if (op_given_.count(n.code)) error(at, "leaf " + n.code + " must not have an operator");
      if (!criterion_given_.count(n.code)) error(at, "leaf " + n.code + " has no criterion");
      return;
    }
    if (!op_given_.count(n.code)) error(at, "node " + n.code + " has children but no operator");
    if (criterion_given_.count(n.code) || n.metric) {
      error(at, "node " + n.code + " has children and must not carry a criterion or metric");
    }
    if (n.children.size() > static_cast<std::size_t>(kMaxArity)) {
      error(at, "node " + n.code + " has " + std::to_string(n.children.size()) +
                    " children; at most " + std::to_string(kMaxArity) + " are supported");
    }
    double sum = 0.0;
    for (const auto& c : n.children) sum += c.weight;
    if (std::abs(sum - 1.0) > kModelWeightTolerance) {
      std::ostringstream msg;
      msg << "node " << n.code << ": child weights sum to " << sum << ", expected 1";
      error(at, msg.str());
    }
    for (const auto& c : n.children) validate(c, &n);
  }

  static void classify(ModelNode& n, int depth, bool global) {
    if (n.is_leaf()) {
      n.kind = NodeKind::MetricLeaf;
    } else if (global && depth == 0) {
      n.kind = NodeKind::Global;
    } else if (depth == (global ? 1 : 0)) {
      n.kind = NodeKind::Factor;
    } else {
      n.kind = NodeKind::SubCharacteristic;
    }
    for (auto& c : n.children) classify(c, depth + 1, global);
  }

  std::vector<ModelError> errors_;
  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::map<std::string, Pos> pos_;
  std::set<std::string> codes_, op_given_, criterion_given_;
};

void collect_leaves(const ModelNode& n, std::vector<const ModelNode*>& out) {
  if (n.is_leaf()) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_leaves(c, out);
}

Preference evaluate_node(const ModelNode& n, const std::function<Preference(const ModelNode&)>& leaf,
                         EvaluationResult& result) {
  Preference p;
  if (n.is_leaf()) {
    p = leaf(n);
  } else {
    std::vector<Preference> values;
    std::vector<double> weights;
    for (const auto& c : n.children) {
      values.push_back(evaluate_node(c, leaf, result));
      weights.push_back(c.weight);
    }
    p = aggregate(values, WeightVector(std::move(weights), kModelWeightTolerance), *n.op);
  }
  result.values.emplace(n.code, p);
  return p;
}

EvaluationResult evaluate_with(const ModelNode& model, const std::function<Preference(const ModelNode&)>& leaf) {
  EvaluationResult result;
  result.global = evaluate_node(model, leaf, result);
  for (const ModelNode* f : factor_nodes(model)) {
    result.ratings.emplace(f->code, classify_rating(result.values.at(f->code)));
  }
  return result;
}

}  // namespace

ModelParseResult parse_model(std::string_view text) { return ModelParser(text).run(); }

std::vector<const ModelNode*> factor_nodes(const ModelNode& root) {
  std::vector<const ModelNode*> out;
  if (root.code == kGlobalCode && !root.is_leaf()) {
    for (const auto& c : root.children) out.push_back(&c);
  } else {
    out.push_back(&root);
  }
  return out;
}

std::vector<const ModelNode*> leaf_nodes(const ModelNode& root) {
  std::vector<const ModelNode*> out;
  collect_leaves(root, out);
  return out;
}

EvaluationResult evaluate(const ModelNode& model, const std::map<std::string, double>& inputs,
                          InputMode mode) {
  return evaluate_with(model, [&](const ModelNode& leaf) {
    const auto it = inputs.find(leaf.code);
    if (it == inputs.end()) throw EvaluationError("no input for leaf " + leaf.code + " (" + leaf.name + ")");
    if (mode == InputMode::MetricValues) return evaluate_criterion(*leaf.criterion, it->second);
    try {
      return Preference(it->second);
    } catch (const ContractViolation& e) {
      throw ContractViolation("leaf " + leaf.code + ": " + e.what());
    }
  });
}

EvaluationResult evaluate(const ModelNode& model, const MetricVector& metrics) {
  return evaluate_with(model, [&](const ModelNode& leaf) {
    if (!leaf.metric) throw EvaluationError("leaf " + leaf.code + " (" + leaf.name + ") is not bound to a metric");
    return evaluate_criterion(*leaf.criterion, metrics[*leaf.metric]);
  });
}

std::string_view to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Global: return "global";
    case NodeKind::Factor: return "factor";
    case NodeKind::SubCharacteristic: return "sub-characteristic";
    case NodeKind::MetricLeaf: return "metric-leaf";
  }
  return "unknown";
}

}  // namespace oodlsp
