#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace lll {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator. cpp_rational
// keeps values in lowest terms with a positive denominator after every
// operation, which is exactly the representation contract we need.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den, throwing DomainError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// True iff 0 <= r <= 1.
bool is_probability(const Rational& r);

// Renders "num/den" in lowest terms, denominator always present ("3/4", "0/1").
std::string to_fraction_string(const Rational& r);

// Accepts "a", "a/b", and exact decimals like "0.99" or "-1.25".
// Throws DomainError on malformed text.
Rational parse_rational(std::string_view text);

// Lossy rendering for display only.
double to_double_approx(const Rational& r);

} // namespace lll
