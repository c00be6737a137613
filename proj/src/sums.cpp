#include "carlitz/sums.hpp"

#include <stdexcept>
#include <utility>

#include "carlitz/cones.hpp"

namespace carlitz {

namespace {

BigInt bigint_from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 uv = neg ? -static_cast<unsigned __int128>(v)
                             : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(uv >> 64));
  BigInt lo(static_cast<unsigned long>(uv & 0xffffffffffffffffULL));
  BigInt r = (hi << 64) + lo;
  if (neg) r = -r;
  return r;
}

}  // namespace

BigRat dedekind_direct(const BigInt& a, const BigInt& b) {
  if (b < 1) throw std::domain_error("dedekind_direct: modulus must be >= 1");
  if (b == 1) return BigRat(0);
  const BigInt am = floor_mod(a, b);
  // s(a, b) = sum_k ((ka/b))((k/b)) = [sum over k with b not dividing ka of
  // (2(ka mod b) - b)(2k - b)] / (4b^2).
  if (b.fits_slong_p() && b.get_si() < (1L << 20)) {
    const long bb = b.get_si();
    const long aa = am.get_si();
    __int128 acc = 0;
    long r = 0;
    for (long k = 1; k < bb; ++k) {
      r += aa;
      if (r >= bb) r -= bb;
      if (r != 0) acc += static_cast<__int128>(2 * r - bb) * (2 * k - bb);
    }
    return make_rat(bigint_from_i128(acc), BigInt(4) * b * b);
  }
  BigInt acc(0), r(0);
  for (BigInt k(1); k < b; ++k) {
    r += am;
    if (r >= b) r -= b;
    if (r != 0) acc += (2 * r - b) * (2 * k - b);
  }
  return make_rat(acc, BigInt(4) * b * b);
}

BigRat dedekind_fast(const BigInt& a, const BigInt& b, std::size_t* steps) {
  if (b < 1) throw std::domain_error("dedekind_fast: modulus must be >= 1");
  BigInt x = floor_mod(a, b);
  if (gcd(x, b) != 1)
    throw std::domain_error("dedekind_fast: arguments must be coprime");
  BigInt y = b;
  // Reciprocity descent: s(x, y) = -1/4 + (x^2 + y^2 + 1)/(12xy) - s(y mod x, x).
  BigRat value(0);
  int sgn = 1;
  std::size_t n = 0;
  while (x != 0) {
    BigRat term = BigRat(-1, 4) + make_rat(x * x + y * y + 1, BigInt(12) * x * y);
    value += (sgn > 0) ? term : -term;
    BigInt nx = y % x;
    y = x;
    x = nx;
    sgn = -sgn;
    ++n;
  }
  if (steps) *steps = n;
  return value;
}

LaurentPoly carlitz_floor_poly(const BigInt& slope, const BigInt& modulus) {
  if (modulus < 1) throw std::domain_error("carlitz_floor_poly: modulus must be >= 1");
  LaurentPoly p(2);
  // floor(k*slope/modulus) = k*floor(slope/modulus) + floor(k*(slope mod modulus)/modulus),
  // and the second part increases by 0 or 1 per step, tracked by the running
  // remainder r = k*(slope mod modulus) mod modulus.
  const BigInt s_div = floor_div(slope, modulus);
  const BigInt s_mod = floor_mod(slope, modulus);
  BigInt q(0), r(0);
  for (BigInt k(1); k < modulus; ++k) {
    r += s_mod;
    if (r >= modulus) {
      r -= modulus;
      q += 1;
    }
    p.add_term({to_exp(q + k * s_div), to_exp(k - 1)}, BigInt(1));
  }
  return p;
}

CarlitzResult carlitz_2d(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw std::domain_error("carlitz_2d: parameters must be >= 1");
  return CarlitzResult{{a, b}, carlitz_floor_poly(a, b)};
}

CarlitzResult carlitz_nd(const std::vector<BigInt>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::domain_error("carlitz_nd: need at least two parameters");
  for (const BigInt& ai : a)
    if (ai < 1) throw std::domain_error("carlitz_nd: parameters must be >= 1");
  const BigInt& an = a.back();
  LaurentPoly p(n);
  ExpVec e(n);
  for (BigInt k(1); k < an; ++k) {
    for (int i = 0; i < n - 1; ++i) e[i] = to_exp(floor_div(k * a[i], an));
    e[n - 1] = to_exp(k - 1);
    p.add_term(e, BigInt(1));
  }
  return CarlitzResult{a, p};
}

LaurentPoly drc_sum(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error("drc_sum: parameters must be >= 1");
  LaurentPoly p(3);
  // ja/b + ka/c = (jac + kab)/(bc)
  const BigInt bc = b * c;
  for (BigInt k(0); k < c; ++k) {
    for (BigInt j(0); j < b; ++j) {
      p.add_term({to_exp(floor_div(j * a * c + k * a * b, bc)), to_exp(j), to_exp(k)},
                 BigInt(1));
    }
  }
  return p;
}

std::array<BigRat, 3> frac_double_sums(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error("frac_double_sums: parameters must be >= 1");
  BigRat s_plain(0), s_weighted(0), s_square(0);
  const BigInt ab = a * b;
  for (BigInt j(0); j < a; ++j) {
    for (BigInt k(0); k < b; ++k) {
      // {jc/a + kc/b} = {(jcb + kca)/(ab)}
      BigRat x = frac(make_rat(j * c * b + k * c * a, ab));
      s_plain += x;
      s_weighted += BigRat(j) * x;
      s_square += x * x;
    }
  }
  return {s_plain, s_weighted, s_square};
}

ShortRatFun carlitz_short_2d(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1)
    throw std::domain_error("carlitz_short_2d: parameters must be >= 1");
  if (gcd(a, b) != 1)
    throw std::domain_error("carlitz_short_2d: parameters must be coprime");
  const Exp ae = to_exp(a), be = to_exp(b);
  // Transform of the half-open cone spanned by (1,0) (excluded facet) and
  // (a,b): the closed cone minus the ray through (a,b).
  ShortRatFun sigma = cone2d_ipt_short({1, 0}, {ae, be});
  sigma.add_term(-1, LaurentPoly::constant(2, BigInt(1)),
                 {{{ae, be}, BinOrient::kOneMinusZ}});
  // c(u,v;a,b) = sigma * (1-u)(1-u^a v^b) / (uv) - 1/v.
  const LaurentPoly clearing =
      one_minus_monomial(2, {1, 0}) * one_minus_monomial(2, {ae, be});
  ShortRatFun result = sigma.mul_poly(clearing).mul_monomial({-1, -1});
  result.push_term(RatTerm(-1, LaurentPoly::monomial({0, -1}), {}));
  return result;
}

}  // namespace carlitz
