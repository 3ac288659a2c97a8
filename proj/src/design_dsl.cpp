#include "oodlsp/design_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace oodlsp {
namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Tok {
  Ident,
  Type,  // qualified or array type name: a.b, a::b, a[]
  Vis,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Colon,
  Comma,
  AggArrow,    // o-
  AssocArrow,  // --
  Invalid,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Position pos;
  Position end;
};

bool ident_start(unsigned char c) { return c == '_' || std::isalpha(c) || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

bool is_keyword(const std::string& s) {
  return s == "class" || s == "agg" || s == "assoc" || s == "attr" || s == "method";
}

// Character-level lexer. Visibility markers are only recognized right after
// `attr` / `method`, which is where '#' means "protected" instead of starting
// a comment.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (at_end()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = Tok::End;
    end.pos = out.empty() ? Position{} : out.back().end;
    end.end = end.pos;
    out.push_back(end);
    return out;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  unsigned char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? static_cast<unsigned char>(text_[i_ + ahead]) : 0;
  }

  void advance() {
    const unsigned char c = peek();
    ++i_;
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      // UTF-8 continuation bytes share the column of their lead byte.
      ++pos_.column;
    }
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      const unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '#' && !(vis_expected_ && ident_start(peek(1)))) {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    Token t;
    t.pos = pos_;
    const unsigned char c = peek();
    auto single = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(1, static_cast<char>(c));
      advance();
    };
    if (vis_expected_ && (c == '+' || c == '-' || c == '#') && ident_start(peek(1))) {
      single(Tok::Vis);
    } else if (ident_start(c)) {
      t.kind = Tok::Ident;
      while (!at_end() && ident_char(peek())) {
        t.text.push_back(static_cast<char>(peek()));
        advance();
      }
      // Qualified and array type names: a.b, a::b, a[]
      while (true) {
        if (peek() == '.' && ident_start(peek(1))) {
          t.kind = Tok::Type;
        } else if (peek() == ':' && peek(1) == ':' && ident_start(peek(2))) {
          t.kind = Tok::Type;
          t.text.push_back(':');
          advance();
        } else if (peek() == '[' && peek(1) == ']') {
          t.kind = Tok::Type;
          t.text += "[]";
          advance();
          advance();
          continue;
        } else {
          break;
        }
        t.text.push_back(static_cast<char>(peek()));
        advance();
        while (!at_end() && ident_char(peek())) {
          t.text.push_back(static_cast<char>(peek()));
          advance();
        }
      }
    } else if (c == '-' && peek(1) == '-') {
      t.kind = Tok::AssocArrow;
      t.text = "--";
      advance();
      advance();
    } else if (c == '{') {
      single(Tok::LBrace);
    } else if (c == '}') {
      single(Tok::RBrace);
    } else if (c == '(') {
      single(Tok::LParen);
    } else if (c == ')') {
      single(Tok::RParen);
    } else if (c == ':') {
      single(Tok::Colon);
    } else if (c == ',') {
      single(Tok::Comma);
    } else {
      single(Tok::Invalid);
    }
    // "o-" lexes as identifier "o" followed by '-'; fold it into one token.
    if (t.kind == Tok::Ident && t.text == "o" && peek() == '-' && peek(1) != '-') {
      t.kind = Tok::AggArrow;
      t.text = "o-";
      advance();
    }
    t.end = pos_;
    vis_expected_ = t.kind == Tok::Ident && (t.text == "attr" || t.text == "method");
    return t;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
  bool vis_expected_ = false;
};

struct SyntaxFailure {
  Position pos;
  std::string message;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> tokens) : text_(text), toks_(std::move(tokens)) {}

  DesignParseResult run() {
    while (cur().kind != Tok::End) {
      try {
        top_level();
      } catch (const SyntaxFailure& f) {
        add_error(f.pos, f.message, ParseError::Kind::Syntax);
        recover_top_level();
      }
    }
    if (errors_.empty()) check_semantics();
    DesignParseResult result;
    result.errors = std::move(errors_);
    if (result.errors.empty()) result.model = std::move(model_);
    return result;
  }

 private:
  const Token& cur() const { return toks_[k_]; }
  const Token& take() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }
  bool at_ident(std::string_view word) const { return cur().kind == Tok::Ident && cur().text == word; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = cur();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxFailure{t.pos, "expected " + expected + ", found " + found};
  }

  std::string identifier(const std::string& what, Position* where = nullptr) {
    if (cur().kind != Tok::Ident || is_keyword(cur().text)) fail(what);
    if (where) *where = cur().pos;
    return take().text;
  }

  std::string type_name() {
    if ((cur().kind != Tok::Ident && cur().kind != Tok::Type) || is_keyword(cur().text)) fail("type name");
    return take().text;
  }

  void expect(Tok kind, const std::string& what) {
    if (cur().kind != kind) fail(what);
    take();
  }

  void top_level() {
    if (at_ident("class")) {
      class_decl();
    } else if (at_ident("agg")) {
      const Position pos = take().pos;
      Aggregation e;
      Position wp, pp;
      e.whole = identifier("whole class name", &wp);
      expect(Tok::AggArrow, "'o-'");
      e.part = identifier("part class name", &pp);
      refs_.push_back({e.whole, wp});
      refs_.push_back({e.part, pp});
      agg_pos_.push_back(pos);
      model_.aggregations.push_back(std::move(e));
    } else if (at_ident("assoc")) {
      take();
      Association e;
      Position ap, bp;
      e.first = identifier("class name", &ap);
      expect(Tok::AssocArrow, "'--'");
      e.second = identifier("class name", &bp);
      refs_.push_back({e.first, ap});
      refs_.push_back({e.second, bp});
      model_.associations.push_back(std::move(e));
    } else {
      fail("'class', 'agg' or 'assoc'");
    }
  }

  void class_decl() {
    take();
    ClassDecl c;
    Position name_pos;
    c.name = identifier("class name", &name_pos);
    if (cur().kind == Tok::Colon) {
      take();
      do {
        if (!c.parents.empty()) take();
        Position pp;
        c.parents.push_back(identifier("parent class name", &pp));
        refs_.push_back({c.parents.back(), pp});
      } while (cur().kind == Tok::Comma);
    }
    if (at_ident("doc")) {
      take();
      c.documented = true;
    }
    expect(Tok::LBrace, "'{'");
    class_pos_.push_back({c.name, name_pos});
    const std::size_t index = model_.classes.size();
    model_.classes.push_back(std::move(c));

    while (cur().kind != Tok::RBrace) {
      if (cur().kind == Tok::End) fail("'}' closing class '" + model_.classes[index].name + "'");
      try {
        member(model_.classes[index]);
      } catch (const SyntaxFailure& f) {
        add_error(f.pos, f.message, ParseError::Kind::Syntax);
        if (!recover_member()) return;
      }
    }
    take();
  }

  Visibility visibility() {
    if (cur().kind != Tok::Vis) fail("visibility marker (+, - or #) directly before the member name");
    const char v = take().text[0];
    return v == '+' ? Visibility::Public : v == '-' ? Visibility::Private : Visibility::Protected;
  }

  void member(ClassDecl& c) {
    if (at_ident("attr")) {
      take();
      Attribute a;
      a.visibility = visibility();
      Position pos;
      a.name = identifier("attribute name", &pos);
      expect(Tok::Colon, "':'");
      a.type = type_name();
      if (at_ident("doc")) {
        take();
        a.documented = true;
      }
      member_pos_[c.name + "." + a.name].push_back(pos);
      c.attributes.push_back(std::move(a));
    } else if (at_ident("method")) {
      take();
      Method m;
      m.visibility = visibility();
      Position pos;
      m.name = identifier("method name", &pos);
      expect(Tok::LParen, "'('");
      if (cur().kind != Tok::RParen) {
        while (true) {
          Parameter p;
          p.name = identifier("parameter name");
          expect(Tok::Colon, "':'");
          p.type = type_name();
          m.parameters.push_back(std::move(p));
          if (cur().kind != Tok::Comma) break;
          take();
        }
      }
      expect(Tok::RParen, "')'");
      while (true) {
        bool* flag = at_ident("virtual")    ? &m.is_virtual
                     : at_ident("override") ? &m.declared_override
                     : at_ident("doc")      ? &m.documented
                                            : nullptr;
        if (!flag) break;
        if (*flag) throw SyntaxFailure{cur().pos, "repeated modifier '" + cur().text + "'"};
        *flag = true;
        take();
      }
      member_pos_[c.name + "." + m.name].push_back(pos);
      c.methods.push_back(std::move(m));
    } else {
      fail("'attr', 'method' or '}'");
    }
  }

  // Skips to the next member keyword or the closing brace of the current
  // class. Returns false if the class body cannot be resumed.
  bool recover_member() {
    if (cur().kind != Tok::End) take();
    while (true) {
      if (cur().kind == Tok::End) return false;
      if (cur().kind == Tok::RBrace || at_ident("attr") || at_ident("method")) return true;
      if (at_ident("class") || at_ident("agg") || at_ident("assoc")) return false;
      take();
    }
  }

  void recover_top_level() {
    if (cur().kind != Tok::End) take();
    int depth = 0;
    while (cur().kind != Tok::End) {
      if (depth <= 0 && (at_ident("class") || at_ident("agg") || at_ident("assoc"))) return;
      if (cur().kind == Tok::LBrace) ++depth;
      if (cur().kind == Tok::RBrace) --depth;
      take();
    }
  }

  Position first_ref(const std::string& name) const {
    for (const auto& [n, p] : refs_) {
      if (n == name) return p;
    }
    return {};
  }

  Position class_position(const std::string& name, std::size_t occurrence) const {
    std::size_t seen = 0;
    for (const auto& [n, p] : class_pos_) {
      if (n == name && seen++ == occurrence) return p;
    }
    return {};
  }

  void check_semantics() {
    for (const Violation& v : validate_design(model_)) {
      Position pos;
      const std::string& entity = v.entities.empty() ? std::string() : v.entities.front();
      switch (v.kind) {
        case ViolationKind::UnresolvedReference: pos = first_ref(entity); break;
        case ViolationKind::DuplicateClass: pos = class_position(entity, 1); break;
        case ViolationKind::DuplicateMember:
        case ViolationKind::EmptyParameterType: {
          const auto it = member_pos_.find(entity);
          if (it != member_pos_.end()) pos = it->second.back();
          break;
        }
        case ViolationKind::AggregationCycle: {
          // report at the first aggregation edge that lies on the cycle
          pos = class_position(entity, 0);
          for (std::size_t i = 0; i < model_.aggregations.size(); ++i) {
            const auto& e = model_.aggregations[i];
            const auto on = [&](const std::string& n) {
              return std::find(v.entities.begin(), v.entities.end(), n) != v.entities.end();
            };
            if (on(e.whole) && on(e.part)) {
              pos = agg_pos_[i];
              break;
            }
          }
          break;
        }
        default: pos = class_position(entity, 0); break;
      }
      add_error(pos, v.message, ParseError::Kind::Semantic);
    }
  }

  void add_error(Position pos, std::string message, ParseError::Kind kind) {
    ParseError e;
    e.line = pos.line;
    e.column = pos.column;
    e.message = std::move(message);
    e.kind = kind;
    e.snippet = line_text(pos.line);
    errors_.push_back(std::move(e));
  }

  std::string line_text(std::size_t line) const {
    std::size_t start = 0;
    for (std::size_t l = 1; l < line; ++l) {
      const auto nl = text_.find('\n', start);
      if (nl == std::string_view::npos) return {};
      start = nl + 1;
    }
    auto end = text_.find('\n', start);
    if (end == std::string_view::npos) end = text_.size();
    std::string s(text_.substr(start, end - start));
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t k_ = 0;
  ClassModel model_;
  std::vector<ParseError> errors_;
  std::vector<std::pair<std::string, Position>> refs_;
  std::vector<std::pair<std::string, Position>> class_pos_;
  std::map<std::string, std::vector<Position>> member_pos_;
  std::vector<Position> agg_pos_;
};

char vis_char(Visibility v) {
  switch (v) {
    case Visibility::Public: return '+';
    case Visibility::Private: return '-';
    case Visibility::Protected: return '#';
  }
  return '-';
}

}  // namespace

DesignParseResult parse_design(std::string_view text) {
  return Parser(text, Lexer(text).run()).run();
}

std::string serialize_design(const ClassModel& model) {
  std::ostringstream out;
  for (const ClassDecl& c : model.classes) {
    out << "class " << c.name;
    for (std::size_t i = 0; i < c.parents.size(); ++i) out << (i ? ", " : " : ") << c.parents[i];
    if (c.documented) out << " doc";
    if (c.attributes.empty() && c.methods.empty()) {
      out << " {}\n";
      continue;
    }
    out << " {\n";
    for (const Attribute& a : c.attributes) {
      out << "  attr " << vis_char(a.visibility) << a.name << ": " << a.type;
      if (a.documented) out << " doc";
      out << '\n';
    }
    for (const Method& m : c.methods) {
      out << "  method " << vis_char(m.visibility) << m.name << '(';
      for (std::size_t i = 0; i < m.parameters.size(); ++i) {
        out << (i ? ", " : "") << m.parameters[i].name << ": " << m.parameters[i].type;
      }
      out << ')';
      if (m.is_virtual) out << " virtual";
      if (m.declared_override) out << " override";
      if (m.documented) out << " doc";
      out << '\n';
    }
    out << "}\n";
  }
  for (const Aggregation& e : model.aggregations) out << "agg " << e.whole << " o- " << e.part << '\n';
  for (const Association& e : model.associations) out << "assoc " << e.first << " -- " << e.second << '\n';
  return out.str();
}

std::string format_diagnostic(const ParseError& error, std::string_view source_name) {
  std::ostringstream out;
  out << source_name << ':' << error.line << ':' << error.column << ": error: " << error.message << '\n';
  out << "  " << error.snippet << '\n';
  out << "  " << std::string(error.column > 0 ? error.column - 1 : 0, ' ') << "^\n";
  return out.str();
}

}  // namespace oodlsp
