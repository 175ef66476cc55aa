#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cubechaos {

// Arbitrary-precision fraction, always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

// A point of R^n with exact coordinates.
using Point = std::vector<Rational>;

Integer pow4(std::size_t k);

// 4^(-k)
Rational pow4_inverse(std::size_t k);

// n / 16^k, the squared diagonal of an order-k sub-cube in dimension n.
Rational diagonal_squared_law(unsigned n, std::size_t k);

// Renders as "num/den", with the denominator always present ("0/1", "3/1").
std::string to_fraction_string(const Rational& x);

// Accepts "num/den" or a bare integer. Throws DomainError on malformed input.
Rational parse_fraction(std::string_view text);

// Exact value of a plain decimal literal such as "0.5746337359" or "1".
// Signs, exponents and empty strings are rejected with DomainError.
Rational parse_decimal(std::string_view text);

// Decimal expansion of a non-negative x truncated toward zero after
// `decimals` fractional digits, e.g. (2/3, 4) -> "0.6666".
std::string to_fixed_truncated(const Rational& x, int decimals);

Rational squared_distance(const Point& a, const Point& b);

}  // namespace cubechaos
