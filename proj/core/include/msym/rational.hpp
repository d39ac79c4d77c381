#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace msym {

// Exact rational arithmetic throughout; there is no floating point anywhere
// in the algebra or the polytope checks.
using Rational = mpq_class;
using Int = std::int64_t;

/// Parses "num" or "num/den" (den > 0 after canonicalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& token);

/// num/den in canonical form. The raw two-argument mpq_class constructor
/// does not reduce, and GMP comparisons assume reduced operands; use this
/// instead. Throws std::invalid_argument on a zero denominator.
Rational make_rational(Int num, Int den);

/// Canonical "num" or "num/den" rendering (no "/1" suffix for integers).
/// Unreduced input is normalized before printing.
std::string rational_to_string(const Rational& q);

/// True when q reduces to an integer. Unreduced input is normalized first.
bool is_integral(const Rational& q);

/// Parses a comma-separated list of rationals ("5,4,3" or "1/2,3").
std::vector<Rational> parse_rational_vector(const std::string& csv);

/// Parses a comma-separated list of non-negative integers. An empty string
/// yields the empty vector (the length-zero margin).
std::vector<Int> parse_int_vector(const std::string& csv);

}  // namespace msym
