#pragma once
/// @file sums.hpp
/// @brief Dedekind sums (direct definition and logarithmic-time reciprocity
///        descent), Dedekind-Carlitz polynomials in two and n variables,
///        double floor/fractional-part sums, and the short rational-function
///        form of the two-variable Carlitz polynomial.

#include <array>
#include <cstddef>
#include <vector>

#include "carlitz/exact.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/ratfun.hpp"

namespace carlitz {

/// A Dedekind-Carlitz polynomial together with the parameters it came from.
struct CarlitzResult {
  std::vector<BigInt> params;
  LaurentPoly polynomial;
};

/// Dedekind sum s(a, b) = sum_{k=1}^{b-1} ((ka/b)) ((k/b)) straight from the
/// sawtooth definition. Requires b >= 1 (any integer a); gcd(a, b) need not
/// be 1. Throws std::domain_error when b < 1.
BigRat dedekind_direct(const BigInt& a, const BigInt& b);

/// Dedekind sum via the reciprocity descent
///   s(a, b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a),
/// running in O(log b) arithmetic steps. Requires b >= 1 and gcd(a, b) = 1
/// (throws std::domain_error otherwise). When `steps` is non-null it receives
/// the number of descent steps taken.
BigRat dedekind_fast(const BigInt& a, const BigInt& b, std::size_t* steps = nullptr);

/// The two-variable floor-exponent sum sum_{k=1}^{modulus-1} u^{floor(k*slope/modulus)} v^{k-1}
/// as a Laurent polynomial in (u, v). Any integer slope is allowed (negative
/// slopes produce negative u-exponents); modulus must be >= 1. The modulus = 1
/// sum is empty (zero polynomial).
LaurentPoly carlitz_floor_poly(const BigInt& slope, const BigInt& modulus);

/// Dedekind-Carlitz polynomial c(u, v; a, b) = sum_{k=1}^{b-1} u^{floor(ka/b)} v^{k-1}.
/// Requires a, b >= 1. Throws std::domain_error otherwise.
CarlitzResult carlitz_2d(const BigInt& a, const BigInt& b);

/// n-variable Dedekind-Carlitz polynomial
///   c(u_1..u_n; a_1..a_n) = sum_{k=1}^{a_n - 1} u_1^{floor(k a_1 / a_n)} ... u_{n-1}^{floor(k a_{n-1} / a_n)} u_n^{k-1}.
/// Requires n >= 2 and all a_i >= 1. Throws std::domain_error otherwise.
CarlitzResult carlitz_nd(const std::vector<BigInt>& a);

/// Dedekind-Rademacher-Carlitz double sum
///   drc(u, v, w; a, b, c) = sum_{k=0}^{c-1} sum_{j=0}^{b-1} u^{floor(ja/b + ka/c)} v^j w^k
/// in three variables. Requires a, b, c >= 1.
LaurentPoly drc_sum(const BigInt& a, const BigInt& b, const BigInt& c);

/// The three double fractional-part sums over j = 0..a-1, k = 0..b-1 of
/// {jc/a + kc/b}, j*{jc/a + kc/b}, and {jc/a + kc/b}^2, in that order.
/// Requires a, b, c >= 1. Exact rational values.
std::array<BigRat, 3> frac_double_sums(const BigInt& a, const BigInt& b, const BigInt& c);

/// c(u, v; a, b) as a short rational function with O(log(a + b)) terms, built
/// from a signed unimodular decomposition of the cone over (1,0) and (a,b)
/// rather than the k-sum. Requires a, b >= 1 and gcd(a, b) = 1. Agrees with
/// carlitz_2d(a, b) as a rational function.
ShortRatFun carlitz_short_2d(const BigInt& a, const BigInt& b);

}  // namespace carlitz
