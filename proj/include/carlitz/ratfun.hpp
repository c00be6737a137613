#pragma once
/// @file ratfun.hpp
/// @brief Short rational functions: finite sums of Laurent-polynomial
///        numerators over products of binomial factors (1 - z^m), together
///        with denominator clearing, graded truncated expansion, and the
///        exact derivative-quotient limit at the all-ones point.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/laurent.hpp"

namespace carlitz {

/// Orientation of a raw binomial factor before normalization.
enum class BinOrient {
  kOneMinusZ,  ///< factor arrived as (1 - z^m)
  kZMinusOne,  ///< factor arrived as (z^m - 1)
};

/// Normalized denominator factor, always meaning (1 - z^monomial) with a
/// nonzero exponent vector.
struct BinFactor {
  ExpVec monomial;

  friend bool operator==(const BinFactor& a, const BinFactor& b) {
    return a.monomial == b.monomial;
  }
  friend bool operator<(const BinFactor& a, const BinFactor& b) {
    return a.monomial < b.monomial;
  }
};

/// One summand sign * numer / prod_i (1 - z^{denom[i].monomial}), with the
/// factor multiset kept sorted.
struct RatTerm {
  int sign = 1;  ///< +1 or -1
  LaurentPoly numer;
  std::vector<BinFactor> denom;

  RatTerm() : numer(1) {}
  RatTerm(int s, LaurentPoly n, std::vector<BinFactor> d);
};

/// Builds a RatTerm from raw factors of either orientation: every (z^m - 1)
/// factor is rewritten as -(1 - z^m), flipping the sign once per rewrite;
/// factors are then sorted. Throws std::domain_error on a zero exponent
/// vector, std::invalid_argument on dimension mismatches.
RatTerm normalize_term(int sign, LaurentPoly numer,
                       const std::vector<std::pair<ExpVec, BinOrient>>& raw_factors);

/// Finite sum of RatTerms over a fixed ambient dimension.
class ShortRatFun {
 public:
  explicit ShortRatFun(int dim);

  static ShortRatFun zero(int dim) { return ShortRatFun(dim); }
  static ShortRatFun from_poly(const LaurentPoly& p);

  int dim() const { return dim_; }
  const std::vector<RatTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Appends a term (dropping it silently when its numerator is zero).
  /// Throws std::invalid_argument on dimension mismatch.
  void push_term(RatTerm t);

  /// Convenience: normalize_term + push_term.
  void add_term(int sign, const LaurentPoly& numer,
                const std::vector<std::pair<ExpVec, BinOrient>>& raw_factors);

  ShortRatFun& operator+=(const ShortRatFun& rhs);
  friend ShortRatFun operator+(ShortRatFun lhs, const ShortRatFun& rhs) {
    lhs += rhs;
    return lhs;
  }
  ShortRatFun operator-() const;

  /// Multiplies every numerator by p.
  ShortRatFun mul_poly(const LaurentPoly& p) const;

  /// Multiplies every numerator by z^e.
  ShortRatFun mul_monomial(const ExpVec& e) const;

  /// Exact evaluation away from all poles. Throws pole_error when any
  /// denominator factor vanishes at the point.
  BigRat value_at(const std::vector<BigRat>& point) const;

  std::string to_string() const;

 private:
  int dim_;
  std::vector<RatTerm> terms_;
};

/// The polynomial 1 - z^m.
LaurentPoly one_minus_monomial(int dim, const ExpVec& m);

/// Puts lhs and rhs over the common denominator lcm (the per-monomial maximum
/// of factor multiplicities across all terms of both sides) and returns the
/// two resulting Laurent-polynomial numerators. Two short rational functions
/// are equal as rational functions iff the returned polynomials are equal.
std::pair<LaurentPoly, LaurentPoly> clear_denominators(const ShortRatFun& lhs,
                                                       const ShortRatFun& rhs);

/// Expands f as a Laurent series, keeping exactly the monomials z^e with
/// grading . e <= degree. Every denominator factor (1 - z^m) must satisfy
/// grading . m > 0 (throws grading_error otherwise), so each factor's
/// geometric series truncates finitely. Exact.
LaurentPoly expand_truncated(const ShortRatFun& f, const ExpVec& grading, Exp degree);

/// Exact limit of numer/denom at the all-ones point via one application of
/// the derivative quotient: returns derivative_at_one(numer, order) /
/// derivative_at_one(denom, order). Throws order_error when the denominator
/// derivative vanishes. The caller is responsible for choosing an order that
/// makes the single application exact (all lower-order denominator partials
/// vanishing at 1).
BigRat lhospital_limit(const LaurentPoly& numer, const LaurentPoly& denom,
                       const std::vector<Exp>& order);

}  // namespace carlitz
