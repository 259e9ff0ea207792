#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gammalat {

// Exact rationals are GMP rationals. mpq_class keeps the canonical reduced
// form with a positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q". Throws Error(InvalidArgument) on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(std::uint32_t n);

// n! / l! for l <= n.
Integer falling_ratio(std::uint32_t n, std::uint32_t l);

inline int sign(const Rational& q) { return sgn(q); }

// num/den in canonical form. The two-argument mpq_class constructor does not
// reduce, and GMP routines assume reduced operands.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gammalat
