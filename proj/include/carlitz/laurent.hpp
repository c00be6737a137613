#pragma once
/// @file laurent.hpp
/// @brief Sparse multivariate Laurent polynomials with exact integer
///        coefficients: the carrier type for Carlitz polynomials, transform
///        numerators, and cleared-denominator identity sides.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/exact.hpp"

namespace carlitz {

/// Single exponent of a Laurent monomial (may be negative).
using Exp = std::int64_t;

/// Exponent vector of a monomial z^e = z_1^{e_1} ... z_d^{e_d}.
using ExpVec = std::vector<Exp>;

/// Evaluation hit a pole: zero raised to a negative power, or a vanishing
/// denominator factor.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A grading direction failed to be strictly positive where positivity is
/// required for series truncation or point enumeration.
class grading_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The derivative order passed to a quotient limit annihilates the
/// denominator, so the quotient rule does not apply.
class order_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Narrowing conversion to an exponent; throws std::domain_error when the
/// value does not fit.
Exp to_exp(const BigInt& n);

/// Immutable-by-convention sparse Laurent polynomial. Terms are kept in a
/// lexicographically ordered map and zero coefficients are never stored, so
/// equal polynomials compare equal structurally.
class LaurentPoly {
 public:
  /// Zero polynomial in the given ambient dimension (>= 1).
  explicit LaurentPoly(int dim);

  /// coeff * z^e.
  static LaurentPoly monomial(const ExpVec& e, const BigInt& coeff = BigInt(1));

  /// Constant polynomial `value` in the given dimension.
  static LaurentPoly constant(int dim, const BigInt& value);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }

  /// Coefficient of z^e (0 when absent). The exponent vector must have the
  /// right length.
  BigInt coeff(const ExpVec& e) const;

  /// Adds c * z^e in place, erasing the term if the sum cancels.
  void add_term(const ExpVec& e, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& rhs) const = default;

  /// Multiplies by coeff * z^e (exact monomial shift).
  LaurentPoly mul_monomial(const ExpVec& e, const BigInt& coeff = BigInt(1)) const;

  /// Exact evaluation at a rational point. Throws pole_error when a zero
  /// coordinate is raised to a negative power; throws std::invalid_argument
  /// on a dimension mismatch.
  BigRat eval(const std::vector<BigRat>& point) const;

  /// Mixed partial derivative of the given order (one entry per variable,
  /// each >= 0) evaluated at the all-ones point, computed term by term via
  /// falling factorials.
  BigRat derivative_at_one(const std::vector<Exp>& order) const;

  /// Monomial substitution z_j -> y^{images[j]}: each variable is replaced by
  /// a (Laurent) monomial in a new variable set whose dimension is the common
  /// length of the image vectors. Exact; throws std::invalid_argument when
  /// images.size() != dim() or the image lengths disagree.
  LaurentPoly substitute(const std::vector<ExpVec>& images) const;

  /// Human-readable form using default variable names (u, v, w, or u1..un).
  std::string to_string() const;

  /// Human-readable form with caller-supplied variable names.
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  int dim_;
  std::map<ExpVec, BigInt> terms_;
};

/// Default variable names: (u), (u,v), (u,v,w) for dim <= 3, else u1..un.
std::vector<std::string> default_var_names(int dim);

/// base^e for a rational base and possibly negative integer exponent.
/// Throws pole_error for 0 raised to a negative power.
BigRat rat_pow(const BigRat& base, Exp e);

}  // namespace carlitz
