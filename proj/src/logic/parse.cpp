#include "vty/logic/parse.hpp"

#include <cctype>

namespace vty::logic {

namespace {

bool is_keyword(std::string_view word) {
  return word == "bot" || word == "not" || word == "and" || word == "or";
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos, bool allow_meta)
      : text_(text), pos_(pos), allow_meta_(allow_meta) {}

  Formula formula() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input, expected a formula");
    if (text_[pos_] == '(') return compound();
    if (text_[pos_] == ')') throw SyntaxError(pos_, "unexpected ')'");
    std::size_t start = pos_;
    std::string_view word = word_token();
    if (word.empty()) throw SyntaxError(start, "unexpected character '" + std::string(1, text_[start]) + "'");
    if (word == "bot") return Formula::bottom();
    if (is_keyword(word)) throw SyntaxError(start, "connective '" + std::string(word) + "' outside parentheses");
    if (is_atom_name(word)) return Formula::atom(std::string(word));
    if (is_meta_name(word)) {
      if (!allow_meta_) throw SyntaxError(start, "metavariable '" + std::string(word) + "' not allowed here");
      return Formula::meta(std::string(word));
    }
    throw SyntaxError(start, "malformed identifier '" + std::string(word) + "'");
  }

  std::size_t pos() const { return pos_; }

 private:
  Formula compound() {
    std::size_t open = pos_++;
    skip_space();
    std::size_t op_pos = pos_;
    std::string_view op;
    if (text_.substr(pos_, 2) == "->") {
      op = "->";
      pos_ += 2;
    } else {
      op = word_token();
    }
    Formula result = Formula::bottom();
    if (op == "not") {
      result = Formula::negation(formula());
    } else if (op == "->" || op == "and" || op == "or") {
      Formula lhs = formula();
      Formula rhs = formula();
      Kind kind = op == "->" ? Kind::Implies : op == "and" ? Kind::And : Kind::Or;
      result = Formula::binary(kind, std::move(lhs), std::move(rhs));
    } else if (op.empty() && pos_ >= text_.size()) {
      throw SyntaxError(pos_, "unexpected end of input after '('");
    } else {
      throw SyntaxError(op_pos, "expected connective '->', 'not', 'and' or 'or'");
    }
    skip_space();
    if (pos_ >= text_.size()) {
      throw SyntaxError(pos_, "unbalanced parentheses: '(' at offset " + std::to_string(open) + " is never closed");
    }
    if (text_[pos_] != ')') throw SyntaxError(pos_, "expected ')'");
    ++pos_;
    return result;
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view word_token() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' && text_[pos_] != ')') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_;
  bool allow_meta_;
};

Formula parse_whole(std::string_view text, bool allow_meta) {
  Parser parser(text, 0, allow_meta);
  Formula f = parser.formula();
  std::size_t pos = parser.pos();
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos != text.size()) throw SyntaxError(pos, "trailing characters after formula");
  return f;
}

}  // namespace

bool is_atom_name(std::string_view name) {
  if (name.empty() || !is_lower(name[0]) || is_keyword(name)) return false;
  for (char c : name) {
    if (!is_lower(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

bool is_meta_name(std::string_view name) {
  if (name.empty() || !is_upper(name[0])) return false;
  for (char c : name) {
    if (!is_lower(c) && !is_upper(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

Formula parse_formula(std::string_view text) { return parse_whole(text, false); }
Formula parse_schema(std::string_view text) { return parse_whole(text, true); }

Formula parse_formula_at(std::string_view text, std::size_t& pos, bool allow_meta) {
  Parser parser(text, pos, allow_meta);
  Formula f = parser.formula();
  pos = parser.pos();
  return f;
}

}  // namespace vty::logic
