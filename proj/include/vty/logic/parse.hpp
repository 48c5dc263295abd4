#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vty/error.hpp"
#include "vty/logic/formula.hpp"

namespace vty::logic {

// PARSE_ERROR carrying the 0-based byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Formula text syntax:
//   formula := atom | "bot" | "(not" formula ")" | "(" op formula formula ")"
//   op      := "->" | "and" | "or"
//   atom    := [a-z][a-z0-9_]*      (excluding the keywords bot/not/and/or)
//   meta    := [A-Z][A-Za-z0-9_]*   (schemas only)
// Tokens are separated by ASCII whitespace.
Formula parse_formula(std::string_view text);
Formula parse_schema(std::string_view text);

// Incremental form used by the manifest reader: parses one formula starting
// at `pos` (leading whitespace skipped) and leaves `pos` after it.
Formula parse_formula_at(std::string_view text, std::size_t& pos, bool allow_meta);

bool is_atom_name(std::string_view name);
bool is_meta_name(std::string_view name);

}  // namespace vty::logic
