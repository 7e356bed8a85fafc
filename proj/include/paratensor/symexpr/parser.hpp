#pragma once

#include <span>
#include <string>
#include <string_view>

#include "paratensor/symexpr/expr.hpp"

namespace paratensor::symexpr {

/// Parses a polynomial expression over the coordinate names in `chart`.
/// Grammar (see docs/expression_grammar.ebnf): integers, coordinate names,
/// + - * / ^, unary sign and parentheses. `/` accepts only a nonzero
/// constant divisor and `^` only a nonnegative integer literal exponent.
/// Throws ParseError (with a 1-based column) on malformed input, unknown
/// identifiers, and division by a non-constant or zero divisor.
Expr parse_expr(std::string_view text, std::span<const std::string> chart);

}  // namespace paratensor::symexpr
