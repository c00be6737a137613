#pragma once
/// @file exact.hpp
/// @brief Exact big-integer / big-rational arithmetic plus the elementary
///        number-theoretic helpers (extended gcd, floor division, fractional
///        part, sawtooth) that every other component builds on.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace carlitz {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator at all times.
using BigRat = mpq_class;

/// Result of the extended Euclidean algorithm: g = a*x + b*y with g > 0.
struct Bezout {
  BigInt g;
  BigInt x;
  BigInt y;
};

/// Extended gcd. Returns the coefficient pair produced by the classical
/// recursion egcd(a, b) = ((g, x', y') = egcd(b mod a, a); (g, y' - (b/a)*x', x'))
/// with base case egcd(0, b) = (b, 0, 1), run on |a|, |b| and sign-corrected.
/// Throws std::domain_error when a = b = 0.
Bezout egcd(const BigInt& a, const BigInt& b);

/// gcd(a, b) >= 0, with gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Floor division: the largest integer q with q*d <= n. The divisor d must be
/// positive; otherwise std::domain_error.
BigInt floor_div(const BigInt& n, const BigInt& d);

/// Floor remainder: n - floor_div(n, d) * d, always in [0, d). d must be
/// positive; otherwise std::domain_error.
BigInt floor_mod(const BigInt& n, const BigInt& d);

/// Fractional part x - floor(x), always in [0, 1).
BigRat frac(const BigRat& x);

/// Sawtooth function: frac(x) - 1/2 for non-integer x, and 0 for integer x.
BigRat sawtooth(const BigRat& x);

/// num/den reduced to canonical form. Throws std::domain_error when den = 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Decimal representation, e.g. "-18".
std::string to_string(const BigInt& n);

/// "p/q" in lowest terms with positive q, or plain "p" when q = 1.
std::string to_string(const BigRat& x);

/// Parse an optionally signed decimal integer. Throws std::domain_error on
/// malformed input.
BigInt parse_bigint(const std::string& text);

/// Parse "p" or "p/q" and canonicalize. Throws std::domain_error on malformed
/// input or zero denominator.
BigRat parse_bigrat(const std::string& text);

}  // namespace carlitz
