#pragma once

#include <string>
#include <vector>

#include "msym/poly.hpp"

namespace msym {

/// Parses a polynomial expression in the y-variables. Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := rational | 'y' uint | '(' expr ')'
/// Whitespace is insignificant. Throws std::invalid_argument with a
/// position-bearing message on malformed input.
Polynomial parse_polynomial(const std::string& text);

/// Semicolon-separated list of polynomial expressions: "y1; y1*y2 + 2".
/// Every entry must be nonempty.
std::vector<Polynomial> parse_polynomial_list(const std::string& text);

/// Largest Y-variable index appearing in any entry (0 when none do).
Int max_y_index(const std::vector<Polynomial>& entries);

}  // namespace msym
