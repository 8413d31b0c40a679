#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacq {

// Exact rational scalar. Everything in the computational core runs on these;
// there is no floating point anywhere. Values are kept in lowest terms with a
// positive denominator, which the construction helpers below enforce.
using Rational = mpq_class;

// Build a canonical rational from machine integers.
Rational rational(long num, long den = 1);

// Strict parser for "p" or "p/q" with q > 0 after sign normalization.
// Throws InputError on anything else (whitespace, empty, zero denominator).
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise, '-' on the numerator.
std::string to_string(const Rational& r);

Rational factorial(unsigned long n);

// Product of the odd numbers 1*3*...*(2k-1); equals 1 for k = 0.
Rational odd_double_factorial(unsigned long k);

} // namespace jacq
