#pragma once
/// @file cones.hpp
/// @brief Simplicial rational cones with per-generator half-open flags,
///        fundamental-parallelepiped lattice enumeration, integer-point
///        transforms, the orthant decomposition into half-open simplicial
///        cones, and the general two-ray cone transform.

#include <cstddef>
#include <vector>

#include "carlitz/exact.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/ratfun.hpp"

namespace carlitz {

/// The two rays of a planar cone were supplied in non-positive orientation
/// (determinant <= 0) where a positively oriented pair is required.
class orientation_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pointed simplicial cone apex + sum_i lambda_i * generators[i], where
/// lambda_i ranges over [0, inf) when open[i] is false and over (0, inf) when
/// open[i] is true. Generators must be linearly independent (nonzero
/// determinant); dimension = number of generators = ambient dimension.
class SimplicialCone {
 public:
  /// Throws std::invalid_argument on inconsistent sizes and
  /// std::domain_error when the generators are linearly dependent.
  SimplicialCone(ExpVec apex, std::vector<ExpVec> generators, std::vector<bool> open);

  int dim() const { return static_cast<int>(generators_.size()); }
  const ExpVec& apex() const { return apex_; }
  const std::vector<ExpVec>& generators() const { return generators_; }
  const std::vector<bool>& open_flags() const { return open_; }

  /// Signed determinant of the generator matrix (never zero).
  const BigInt& det() const { return det_; }
  BigInt abs_det() const;

  /// Exact membership test honoring the half-open flags.
  bool contains(const ExpVec& point) const;

 private:
  ExpVec apex_;
  std::vector<ExpVec> generators_;
  std::vector<bool> open_;
  BigInt det_;
};

/// Fundamental parallelepiped of a cone together with its lattice points.
struct FundParLattice {
  SimplicialCone cone;
  /// Absolute coordinates (apex offset included), lexicographically sorted.
  /// Size always equals |det|.
  std::vector<ExpVec> points;
};

/// Enumerates the lattice points of the half-open fundamental parallelepiped
/// apex + { sum_i lambda_i g_i } with lambda_i in [0,1) for closed generators
/// and (0,1] for open ones.
FundParLattice fundpar_points(const SimplicialCone& cone);

/// Integer-point transform of the cone as a single-term short rational
/// function: (sum of z^p over parallelepiped points) / prod_i (1 - z^{g_i}).
ShortRatFun cone_ipt(const SimplicialCone& cone);

/// Decomposition of the nonnegative orthant into n half-open simplicial
/// cones K_1..K_n through the ray a: K_j has the identity generators with
/// slot j replaced by a, and generators 1..j-1 marked open. The point sets
/// partition Z_{>=0}^n for every positive integer vector a. Requires
/// n = a.size() >= 2 and a_i >= 1.
std::vector<SimplicialCone> orthant_decomposition(const std::vector<BigInt>& a);

/// Integer-point transform of the closed planar cone spanned by (a, b) and
/// (c, d) with ad - bc >= 1, computed in closed form through the Bezout pair
/// of a and b (ax + by = 1):
///   sigma = (1 + u^{a-y} v^{b+x} * C(U, V)) / ((u^a v^b - 1)(u^c v^d - 1))
/// where C is the floor-exponent sum for slope cx + dy and modulus ad - bc,
/// evaluated at U = u^a v^b, V = u^{-y} v^x. Requires a, b, c, d >= 1,
/// gcd(a,b) = gcd(c,d) = 1 (std::domain_error) and ad - bc >= 1
/// (orientation_error).
ShortRatFun cone_transform_2d(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d);

/// Same transform with an explicit Bezout pair ax + by = 1 (any valid pair
/// gives the same rational function). Throws std::domain_error when
/// ax + by != 1.
ShortRatFun cone_transform_2d(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d, const BigInt& x, const BigInt& y);

/// All cone lattice points p with grading . p <= degree, as the Laurent
/// polynomial sum of z^p. The grading must be strictly positive on every
/// generator (grading_error otherwise), which makes the enumeration finite.
LaurentPoly brute_force_cone_points(const SimplicialCone& cone, const ExpVec& grading,
                                    Exp degree);

/// Integer-point transform of the closed planar cone spanned by primitive g
/// and h with det(g h) >= 1, as a signed sum of O(log det) unimodular cone
/// and ray transforms. Agrees with cone_ipt pointwise as a rational function.
ShortRatFun cone2d_ipt_short(const ExpVec& g, const ExpVec& h);

}  // namespace carlitz
