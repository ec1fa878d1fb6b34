#pragma once

// Expression language for piecewise-linear functions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := rational | 'x' | max(list) | min(list) | '(' expr ')'
//   list    := expr (',' expr)*
//
// Rationals are p, p/q or finite decimals. A product needs a constant factor.

#include <string_view>

#include "tropical/piecewise.hpp"

namespace trop {

// Throws tropical::Error: ParseError (index = byte offset) or NonLinearTerm.
tropical::PiecewiseLinear parse_function(std::string_view text);

}  // namespace trop
