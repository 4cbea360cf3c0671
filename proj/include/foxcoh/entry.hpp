#pragma once

#include <string_view>

#include "foxcoh/field.hpp"

namespace foxcoh {

/// Evaluates a constant matrix-entry expression exactly:
///
///   expr   := term {("+"|"-") term}
///   term   := factor {"*" factor} ["/" uint]
///   factor := uint | "sqrt3" | "sqrt5" | "sqrt15" | "i" | "j" | "k"
///           | "(" expr ")" | "-" factor
///
/// Products are taken left to right in the quaternion algebra over F.
/// Throws SyntaxError, Error(NonConstantExpression) for unknown identifiers,
/// Error(DivisionByZero) for "/0".
Quaternion parse_entry(std::string_view text);

}  // namespace foxcoh
