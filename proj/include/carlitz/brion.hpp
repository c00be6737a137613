#pragma once
/// @file brion.hpp
/// @brief Vertex-cone assembly for the lattice right triangle and the dilated
///        lattice tetrahedron with vertices (a,0,0), (0,b,0), (0,0,c), 0:
///        explicit identity sides, lattice-point counting, the closed-form
///        cubic lattice-point counting polynomial, and its recovery by an
///        exact derivative-quotient limit.

#include <array>
#include <utility>

#include "carlitz/cones.hpp"
#include "carlitz/exact.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/ratfun.hpp"

namespace carlitz {

/// Cubic counting polynomial c3*t^3 + c2*t^2 + c1*t + c0 with exact rational
/// coefficients.
struct EhrhartCubic {
  BigRat c3;
  BigRat c2;
  BigRat c1;
  BigRat c0;

  BigRat eval(const BigInt& t) const;
};

/// The three vertex-cone transforms of the right triangle with legs a, b
/// (vertices (0,0), (a,0), (0,b)), in that vertex order. Requires
/// gcd(a, b) = 1 and a, b >= 1.
std::array<ShortRatFun, 3> triangle_vertex_cones(const BigInt& a, const BigInt& b);

/// Sum of z^(x,y) over all lattice points of the triangle bx + ay <= ab,
/// x, y >= 0, by direct scan.
LaurentPoly triangle_lattice_poly(const BigInt& a, const BigInt& b);

/// Both sides of the cleared two-variable triangle identity: the left side
/// is (u-1)(v-1) * triangle_lattice_poly, the right side is assembled from
/// the vertex-cone transforms times (v-1):
///   (v-1)[u^a v * C(u^{-1}, v; a, b) + u^{a+1} + u v^b] - (v^{b+1} - 1).
/// The two polynomials are equal for all valid inputs.
std::pair<LaurentPoly, LaurentPoly> triangle_identity_sides(const BigInt& a,
                                                            const BigInt& b);

/// Sum of z^(x,y,z) over the lattice points of the dilated tetrahedron
/// bcx + cay + abz <= abct, coordinates >= 0, by direct scan. Requires
/// a, b, c, t >= 1.
LaurentPoly tetrahedron_lattice_poly(const BigInt& a, const BigInt& b, const BigInt& c,
                                     const BigInt& t);

/// The clearing polynomial (u-1)(v-1)(w-1)(u^a - v^b)(u^a - w^c)(v^b - w^c).
LaurentPoly tetrahedron_denominator(const BigInt& a, const BigInt& b, const BigInt& c);

/// Right side of the cleared tetrahedron identity, assembled from the four
/// vertex-cone transforms (the apex cone and the three double-sum cones at
/// the dilated vertices). Requires a, b, c pairwise coprime, all >= 1, t >= 1.
LaurentPoly tetrahedron_rhs(const BigInt& a, const BigInt& b, const BigInt& c,
                            const BigInt& t);

/// (lhs, rhs) of the cleared tetrahedron identity: lhs = denominator *
/// lattice scan, rhs = vertex-cone assembly. Equal for all valid inputs.
std::pair<LaurentPoly, LaurentPoly> tetrahedron_sides(const BigInt& a, const BigInt& b,
                                                      const BigInt& c, const BigInt& t);

/// Number of lattice points in the dilated tetrahedron, by direct counting.
/// Requires a, b, c >= 1, t >= 0.
BigInt count_tetrahedron(const BigInt& a, const BigInt& b, const BigInt& c,
                         const BigInt& t);

/// Closed-form cubic counting polynomial of the tetrahedron:
///   c3 = abc/6,
///   c2 = (ab + ac + bc + 1)/4,
///   c1 = 3/4 + (a+b+c)/4 + (1/12)(bc/a + ca/b + ab/c + 1/(abc))
///        - s(bc, a) - s(ca, b) - s(ab, c),
///   c0 = 1,
/// where s is the Dedekind sum. Requires a, b, c pairwise coprime, >= 1.
EhrhartCubic ehrhart_mp(const BigInt& a, const BigInt& b, const BigInt& c);

/// Lattice-point count of the t-dilate recovered analytically: the cleared
/// identity gives sigma = N/D as a rational function, and the exact
/// derivative-quotient limit at the all-ones point with order (1, 2, 3)
/// evaluates it. Equals count_tetrahedron for all valid inputs.
BigRat ehrhart_via_lhospital(const BigInt& a, const BigInt& b, const BigInt& c,
                             const BigInt& t);

}  // namespace carlitz
