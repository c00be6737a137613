#pragma once
/// @file identities.hpp
/// @brief Executable reciprocity and decomposition checks. Every check
///        computes both sides exactly and independently, reports whether they
///        agree, and on disagreement carries the exact difference.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/exact.hpp"
#include "carlitz/laurent.hpp"

namespace carlitz {

/// Outcome of one identity check. Polynomial identities populate the *_poly
/// fields; rational-number identities populate the *_rat fields. diff is
/// lhs - rhs and is zero exactly when the identity holds.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  bool holds = false;
  std::optional<LaurentPoly> lhs_poly;
  std::optional<LaurentPoly> rhs_poly;
  std::optional<LaurentPoly> diff_poly;
  std::optional<BigRat> lhs_rat;
  std::optional<BigRat> rhs_rat;
  std::optional<BigRat> diff_rat;
};

/// Two-variable Carlitz reciprocity, cleared:
///   (v-1) c(u,v;a,b) + (u-1) c(v,u;b,a) = u^{a-1} v^{b-1} - 1.
/// Requires a, b >= 1 coprime.
IdentityReport check_carlitz(const BigInt& a, const BigInt& b);

/// n-variable Carlitz reciprocity: the cyclic sum over j of
///   (u_j - 1) * c(cyclic shift putting u_j last) = prod_i u_i^{a_i - 1} - 1.
/// Requires n >= 2 and pairwise coprime a_i >= 1.
IdentityReport check_berndt_dieter(const std::vector<BigInt>& a);

/// Dedekind reciprocity s(a,b) + s(b,a) = -1/4 + (a^2 + b^2 + 1)/(12ab).
/// Requires coprime a, b >= 1.
IdentityReport check_dedekind(const BigInt& a, const BigInt& b);

/// Cleared three-cone identity for the planar cone spanned by (a,b), (c,d):
/// the transform of the full cone against the two boundary Carlitz cones.
/// Uses the canonical Bezout pair and re-verifies with two shifted pairs;
/// holds only when all agree. Requires a, b, c, d >= 1, gcd(a,b) =
/// gcd(c,d) = 1, ad - bc >= 1.
IdentityReport check_two_ray(const BigInt& a, const BigInt& b, const BigInt& c,
                             const BigInt& d);

/// Unimodular specialization (ad - bc = 1) of the two-ray identity:
///   (u-1)(u^a v^b - 1) c(v,u;d,c) + (v-1)(u^c v^d - 1) c(u,v;a,b)
///     = u^{a+c-1} v^{b+d-1} - u^a v^b - u^c v^d + u^{a-1} v^b + u^c v^{d-1}
///       - u^{a-1} v^{b-1} - u^{c-1} v^{d-1} + 1.
/// Requires a, b, c, d >= 1 and ad - bc = 1.
IdentityReport check_unimodular_cor(const BigInt& a, const BigInt& b, const BigInt& c,
                                    const BigInt& d);

/// Three-term Dedekind sum identity through a Bezout pair ax + by = 1:
///   s(a,b) + s(c,d) = s(cx - dy, ad + bc) - 1/4
///     + (1/12)(b/(d(ad+bc)) + d/(b(ad+bc)) + (ad+bc)/(bd)).
/// Requires a, b, c, d >= 1, gcd(a,b) = gcd(c,d) = 1.
IdentityReport check_pommersheim_3term(const BigInt& a, const BigInt& b,
                                       const BigInt& c, const BigInt& d);

/// Rademacher's three-term reciprocity for pairwise coprime a, b, c >= 1:
///   s(a b'; c) + s(c a'; b) + s(b c'; a)
///     = -1/4 + (1/12)(a/(bc) + b/(ca) + c/(ab)),
/// where b' b = 1 (mod c), a' a = 1 (mod b), c' c = 1 (mod a).
IdentityReport check_rademacher_3term(const BigInt& a, const BigInt& b,
                                      const BigInt& c);

/// Two-sum form for a unimodular quadruple (ad - bc = 1, all >= 1):
///   s(a,b) + s(d,c) = -1/2 + (1/12)(a/b + a/c + d/b + d/c).
IdentityReport check_rademacher_abcd(const BigInt& a, const BigInt& b, const BigInt& c,
                                     const BigInt& d);

/// Verifies that the planar half-open cone pair through (a, b) tiles the
/// nonnegative quadrant: the two transforms sum to 1/((1-u)(1-v)) as rational
/// functions (checked by clearing denominators), and the truncated expansions
/// partition the quadrant points up to a fixed degree. Requires coprime
/// a, b >= 1.
IdentityReport check_quadrant_decomposition(const BigInt& a, const BigInt& b);

/// n-dimensional variant for a positive integer vector a (n >= 2): the
/// orthant cones' transforms sum to prod_i 1/(1 - z_i).
IdentityReport check_quadrant_decomposition(const std::vector<BigInt>& a);

}  // namespace carlitz
