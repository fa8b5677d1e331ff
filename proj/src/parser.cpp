#include <cctype>
#include <optional>

#include "extri/errors.hpp"
#include "extri/quiver.hpp"

namespace extri {

namespace {

enum class Tok { Ident, Number, Colon, Arrow, Star, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

/// Splits the input into statements of tokens. Statements end at a newline or
/// ';'; comments run from '#' to the end of the line.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> statements(1);
  int line = 1, col = 1;
  std::size_t i = 0;
  auto end_statement = [&] {
    if (!statements.back().empty()) statements.emplace_back();
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      end_statement();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ';') {
      end_statement();
      ++i;
      ++col;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::Arrow;
      t.text = "->";
      i += 2;
      col += 2;
    } else if (c == ':' || c == '*' || c == '+' || c == '-') {
      t.kind = c == ':' ? Tok::Colon : c == '*' ? Tok::Star : c == '+' ? Tok::Plus : Tok::Minus;
      t.text = std::string(1, c);
      ++i;
      ++col;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      bool digits = true;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) digits = false;
        ++j;
      }
      t.kind = digits ? Tok::Number : Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    statements.back().push_back(std::move(t));
  }
  if (statements.back().empty()) statements.pop_back();
  return statements;
}

class StatementParser {
 public:
  StatementParser(const std::vector<Token>& toks, int eol_line, int eol_col)
      : toks_(toks), eol_line_(eol_line), eol_col_(eol_col) {}

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    static const Token end{Tok::End, "", 0, 0};
    return at_end() ? end : toks_[pos_];
  }
  bool accept(Tok k) {
    if (!at_end() && toks_[pos_].kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(Tok k, const char* what) {
    if (at_end()) throw ParseError(std::string("expected ") + what + " before end of statement", eol_line_, eol_col_);
    if (toks_[pos_].kind != k) {
      throw ParseError(std::string("expected ") + what + ", found '" + toks_[pos_].text + "'", toks_[pos_].line,
                       toks_[pos_].column);
    }
    return toks_[pos_++];
  }
  void expect_end() {
    if (!at_end()) {
      throw ParseError("unexpected '" + toks_[pos_].text + "'", toks_[pos_].line, toks_[pos_].column);
    }
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  int eol_line_;
  int eol_col_;
};

long parse_number(const Token& t) {
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    throw ParseError("number out of range: " + t.text, t.line, t.column);
  }
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view text, std::uint32_t field_override, const AlgebraOptions& options) {
  auto statements = tokenize(text);

  std::optional<std::uint32_t> field;
  std::vector<int> vertex_ids;
  std::vector<std::pair<Token, std::pair<Token, Token>>> arrow_decls;  // name, (src, tgt)
  struct RawTerm {
    long coef;
    std::vector<Token> arrows;
  };
  std::vector<std::vector<RawTerm>> raw_relations;

  for (const auto& st : statements) {
    const Token& head = st.front();
    const Token& last = st.back();
    StatementParser ps(st, last.line, last.column + static_cast<int>(last.text.size()));
    ps.expect(Tok::Ident, "keyword");
    if (head.text == "field") {
      if (field) throw ParseError("duplicate 'field' statement", head.line, head.column);
      if (!raw_relations.empty()) throw ParseError("'field' must precede relations", head.line, head.column);
      const Token& n = ps.expect(Tok::Number, "field characteristic");
      long p = parse_number(n);
      if (p < 2 || p >= 65536 || !is_prime(static_cast<std::uint32_t>(p))) {
        throw ParseError("field characteristic must be a prime below 65536", n.line, n.column);
      }
      field = static_cast<std::uint32_t>(p);
      ps.expect_end();
    } else if (head.text == "vertices") {
      if (ps.at_end()) throw ParseError("'vertices' needs at least one id", head.line, head.column);
      while (!ps.at_end()) {
        const Token& v = ps.expect(Tok::Number, "vertex id");
        int id = static_cast<int>(parse_number(v));
        for (int existing : vertex_ids) {
          if (existing == id) throw ParseError("duplicate vertex id " + v.text, v.line, v.column);
        }
        vertex_ids.push_back(id);
      }
    } else if (head.text == "arrow") {
      Token name = ps.expect(Tok::Ident, "arrow name");
      ps.expect(Tok::Colon, "':'");
      Token src = ps.expect(Tok::Number, "source vertex");
      ps.expect(Tok::Arrow, "'->'");
      Token tgt = ps.expect(Tok::Number, "target vertex");
      ps.expect_end();
      arrow_decls.push_back({name, {src, tgt}});
    } else if (head.text == "relation") {
      if (!field) throw ParseError("'field' must precede relations", head.line, head.column);
      std::vector<RawTerm> terms;
      long sign = 1;
      if (ps.accept(Tok::Minus)) sign = -1;
      while (true) {
        RawTerm term{sign, {}};
        if (ps.peek().kind == Tok::Number) {
          const Token& c = ps.expect(Tok::Number, "coefficient");
          term.coef *= parse_number(c);
          ps.expect(Tok::Star, "'*' after coefficient");
        }
        term.arrows.push_back(ps.expect(Tok::Ident, "arrow name"));
        while (ps.accept(Tok::Star)) term.arrows.push_back(ps.expect(Tok::Ident, "arrow name"));
        terms.push_back(std::move(term));
        if (ps.accept(Tok::Plus)) {
          sign = 1;
        } else if (ps.accept(Tok::Minus)) {
          sign = -1;
        } else {
          break;
        }
      }
      ps.expect_end();
      raw_relations.push_back(std::move(terms));
    } else {
      throw ParseError("unknown statement '" + head.text + "'", head.line, head.column);
    }
  }

  if (!field) throw ParseError("missing 'field' statement", 1, 1);
  if (vertex_ids.empty()) throw ParseError("missing 'vertices' statement", 1, 1);

  std::vector<Arrow> arrows;
  for (const auto& [name, ends] : arrow_decls) {
    Arrow a;
    a.name = name.text;
    int ids[2] = {static_cast<int>(parse_number(ends.first)), static_cast<int>(parse_number(ends.second))};
    const Token* toks[2] = {&ends.first, &ends.second};
    int idx[2] = {-1, -1};
    for (int k = 0; k < 2; ++k) {
      for (std::size_t v = 0; v < vertex_ids.size(); ++v) {
        if (vertex_ids[v] == ids[k]) idx[k] = static_cast<int>(v);
      }
      if (idx[k] < 0) {
        throw ParseError("unknown vertex " + toks[k]->text, toks[k]->line, toks[k]->column);
      }
    }
    for (const auto& other : arrows) {
      if (other.name == a.name) throw ParseError("duplicate arrow name '" + a.name + "'", name.line, name.column);
    }
    a.source = idx[0];
    a.target = idx[1];
    arrows.push_back(std::move(a));
  }
  Quiver quiver(vertex_ids, arrows);

  std::uint32_t p = field_override != 0 ? field_override : *field;
  PrimeField f(p);
  std::vector<Relation> relations;
  for (const auto& terms : raw_relations) {
    Relation rel;
    for (const auto& t : terms) {
      std::vector<int> path;
      for (const auto& tok : t.arrows) {
        int a = quiver.arrow_index(tok.text);
        if (a < 0) throw ParseError("unknown arrow '" + tok.text + "'", tok.line, tok.column);
        path.push_back(a);
      }
      rel.terms.emplace_back(f.reduce(t.coef), std::move(path));
    }
    relations.push_back(std::move(rel));
  }
  return BoundQuiverAlgebra::build(std::move(quiver), p, std::move(relations), options);
}

}  // namespace extri
