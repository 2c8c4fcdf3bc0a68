#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace inselim {

// Exact arithmetic everywhere; no floating point enters any computation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p" or "p/q" with an optional leading '-' on p and q > 0.
// The result is canonicalized to lowest terms. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// base^exp with exp possibly negative; requires base != 0 when exp < 0.
Rational pow_rational(const Rational& base, long exp);

}  // namespace inselim
