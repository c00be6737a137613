#include "carlitz/ratfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace carlitz {

namespace {

bool is_zero_vec(const ExpVec& m) {
  return std::all_of(m.begin(), m.end(), [](Exp e) { return e == 0; });
}

Exp weight(const ExpVec& grading, const ExpVec& e) {
  Exp w = 0;
  for (std::size_t i = 0; i < grading.size(); ++i) w += grading[i] * e[i];
  return w;
}

// Drops every monomial whose grading weight exceeds `degree`.
LaurentPoly truncate(const LaurentPoly& p, const ExpVec& grading, Exp degree) {
  LaurentPoly out(p.dim());
  for (const auto& [e, c] : p.terms())
    if (weight(grading, e) <= degree) out.add_term(e, c);
  return out;
}

}  // namespace

RatTerm::RatTerm(int s, LaurentPoly n, std::vector<BinFactor> d)
    : sign(s), numer(std::move(n)), denom(std::move(d)) {
  if (sign != 1 && sign != -1)
    throw std::domain_error("RatTerm: sign must be +1 or -1");
  for (const auto& f : denom) {
    if (static_cast<int>(f.monomial.size()) != numer.dim())
      throw std::invalid_argument("RatTerm: factor dimension mismatch");
    if (is_zero_vec(f.monomial))
      throw std::domain_error("RatTerm: denominator factor with zero exponent");
  }
  std::sort(denom.begin(), denom.end());
}

RatTerm normalize_term(int sign, LaurentPoly numer,
                       const std::vector<std::pair<ExpVec, BinOrient>>& raw_factors) {
  if (sign != 1 && sign != -1)
    throw std::domain_error("normalize_term: sign must be +1 or -1");
  std::vector<BinFactor> factors;
  factors.reserve(raw_factors.size());
  for (const auto& [m, orient] : raw_factors) {
    // (z^m - 1) = -(1 - z^m): flip the term sign once per such factor.
    if (orient == BinOrient::kZMinusOne) sign = -sign;
    factors.push_back(BinFactor{m});
  }
  return RatTerm(sign, std::move(numer), std::move(factors));
}

ShortRatFun::ShortRatFun(int dim) : dim_(dim) {
  if (dim < 1) throw std::domain_error("ShortRatFun: dimension must be >= 1");
}

ShortRatFun ShortRatFun::from_poly(const LaurentPoly& p) {
  ShortRatFun f(p.dim());
  f.push_term(RatTerm(1, p, {}));
  return f;
}

void ShortRatFun::push_term(RatTerm t) {
  if (t.numer.dim() != dim_)
    throw std::invalid_argument("ShortRatFun::push_term: dimension mismatch");
  if (t.numer.is_zero()) return;
  terms_.push_back(std::move(t));
}

void ShortRatFun::add_term(int sign, const LaurentPoly& numer,
                           const std::vector<std::pair<ExpVec, BinOrient>>& raw_factors) {
  push_term(normalize_term(sign, numer, raw_factors));
}

ShortRatFun& ShortRatFun::operator+=(const ShortRatFun& rhs) {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("ShortRatFun: dimension mismatch in +");
  for (const auto& t : rhs.terms_) push_term(t);
  return *this;
}

ShortRatFun ShortRatFun::operator-() const {
  ShortRatFun out(dim_);
  for (const auto& t : terms_) out.push_term(RatTerm(-t.sign, t.numer, t.denom));
  return out;
}

ShortRatFun ShortRatFun::mul_poly(const LaurentPoly& p) const {
  if (p.dim() != dim_)
    throw std::invalid_argument("ShortRatFun::mul_poly: dimension mismatch");
  ShortRatFun out(dim_);
  for (const auto& t : terms_) out.push_term(RatTerm(t.sign, t.numer * p, t.denom));
  return out;
}

ShortRatFun ShortRatFun::mul_monomial(const ExpVec& e) const {
  ShortRatFun out(dim_);
  for (const auto& t : terms_)
    out.push_term(RatTerm(t.sign, t.numer.mul_monomial(e), t.denom));
  return out;
}

BigRat ShortRatFun::value_at(const std::vector<BigRat>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("ShortRatFun::value_at: point dimension mismatch");
  BigRat total(0);
  for (const auto& t : terms_) {
    BigRat denom_val(1);
    for (const auto& f : t.denom) {
      BigRat mono(1);
      for (int i = 0; i < dim_; ++i) mono *= rat_pow(point[i], f.monomial[i]);
      BigRat fv = BigRat(1) - mono;
      if (fv == 0)
        throw pole_error("ShortRatFun::value_at: denominator factor vanishes at the point");
      denom_val *= fv;
    }
    BigRat val = t.numer.eval(point) / denom_val;
    total += (t.sign > 0) ? val : -val;
  }
  return total;
}

std::string ShortRatFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      if (t.sign < 0) os << "- ";
      first = false;
    } else {
      os << (t.sign < 0 ? " - " : " + ");
    }
    os << "(" << t.numer.to_string() << ")";
    for (const auto& f : t.denom)
      os << " / (" << one_minus_monomial(dim_, f.monomial).to_string() << ")";
  }
  return os.str();
}

LaurentPoly one_minus_monomial(int dim, const ExpVec& m) {
  if (static_cast<int>(m.size()) != dim)
    throw std::invalid_argument("one_minus_monomial: dimension mismatch");
  if (is_zero_vec(m))
    throw std::domain_error("one_minus_monomial: zero exponent vector");
  LaurentPoly p = LaurentPoly::constant(dim, BigInt(1));
  p.add_term(m, BigInt(-1));
  return p;
}

std::pair<LaurentPoly, LaurentPoly> clear_denominators(const ShortRatFun& lhs,
                                                       const ShortRatFun& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("clear_denominators: dimension mismatch");
  const int dim = lhs.dim();

  // Per-monomial maximum multiplicity over every term of both sides.
  std::map<ExpVec, int> lcm;
  auto absorb = [&lcm](const ShortRatFun& f) {
    for (const auto& t : f.terms()) {
      std::map<ExpVec, int> local;
      for (const auto& fac : t.denom) ++local[fac.monomial];
      for (const auto& [m, mult] : local) {
        auto [it, inserted] = lcm.emplace(m, mult);
        if (!inserted && it->second < mult) it->second = mult;
      }
    }
  };
  absorb(lhs);
  absorb(rhs);

  auto cleared = [&](const ShortRatFun& f) {
    LaurentPoly out(dim);
    for (const auto& t : f.terms()) {
      std::map<ExpVec, int> local;
      for (const auto& fac : t.denom) ++local[fac.monomial];
      LaurentPoly poly = (t.sign > 0) ? t.numer : -t.numer;
      for (const auto& [m, mult] : lcm) {
        auto it = local.find(m);
        int have = (it == local.end()) ? 0 : it->second;
        for (int k = have; k < mult; ++k) poly *= one_minus_monomial(dim, m);
      }
      out += poly;
    }
    return out;
  };
  return {cleared(lhs), cleared(rhs)};
}

LaurentPoly expand_truncated(const ShortRatFun& f, const ExpVec& grading, Exp degree) {
  if (static_cast<int>(grading.size()) != f.dim())
    throw std::invalid_argument("expand_truncated: grading dimension mismatch");
  LaurentPoly out(f.dim());
  for (const auto& t : f.terms()) {
    LaurentPoly partial = truncate(t.numer, grading, degree);
    for (const auto& fac : t.denom) {
      const Exp step = weight(grading, fac.monomial);
      if (step <= 0)
        throw grading_error(
            "expand_truncated: grading not strictly positive on a denominator factor");
      if (partial.is_zero()) break;
      // Lowest weight present in the running product; factor powers beyond
      // (degree - low)/step cannot contribute below the cutoff.
      Exp low = weight(grading, partial.terms().begin()->first);
      for (const auto& [e, c] : partial.terms()) low = std::min(low, weight(grading, e));
      LaurentPoly series(f.dim());
      ExpVec power(f.dim(), 0);
      for (Exp k = 0; low + k * step <= degree; ++k) {
        series.add_term(power, BigInt(1));
        for (int i = 0; i < f.dim(); ++i) power[i] += fac.monomial[i];
      }
      partial = truncate(partial * series, grading, degree);
    }
    if (t.sign > 0)
      out += partial;
    else
      out -= partial;
  }
  return out;
}

BigRat lhospital_limit(const LaurentPoly& numer, const LaurentPoly& denom,
                       const std::vector<Exp>& order) {
  BigRat dv = denom.derivative_at_one(order);
  if (dv == 0)
    throw order_error(
        "lhospital_limit: denominator derivative of this order vanishes at the all-ones point");
  return numer.derivative_at_one(order) / dv;
}

}  // namespace carlitz
