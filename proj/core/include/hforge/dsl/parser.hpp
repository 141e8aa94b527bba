#pragma once

#include <cstddef>
#include <string_view>

#include "hforge/dsl/ast.hpp"
#include "hforge/dsl/diagnostic.hpp"

namespace hforge::dsl {

// Grammar:
//   identity := expr "==" expr
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := "-"? atom ("^" atom)?
//   atom     := INT | INT "/" INT | NAME | "(" expr ")" | NAME "(" args ")"
//             | "sum" "(" NAME "=" expr ".." expr "," expr ")"
//
// INT "/" INT is read as one rational literal only at the start of a term and
// when no "^" follows, so 1/2^k is 1/(2^k) and a/1/2 is (a/1)/2.
//
// Parsing covers source[begin, end); spans are offsets into the whole source.

Result<ExprPtr> parse_expr(std::string_view source, std::size_t begin = 0,
                           std::size_t end = std::string_view::npos);
Result<Identity> parse_identity(std::string_view source, std::size_t begin = 0,
                                std::size_t end = std::string_view::npos);

/// Minimal-parenthesis rendering that parses back to a structurally equal tree.
std::string pretty(const Expr& e);
std::string pretty(const Identity& id);

}  // namespace hforge::dsl
