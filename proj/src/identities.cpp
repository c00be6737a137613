#include "carlitz/identities.hpp"

#include <utility>

#include "carlitz/cones.hpp"
#include "carlitz/ratfun.hpp"
#include "carlitz/sums.hpp"

namespace carlitz {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

IdentityReport poly_report(std::string name, Params params, LaurentPoly lhs,
                           LaurentPoly rhs) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  LaurentPoly diff = lhs - rhs;
  r.holds = diff.is_zero();
  r.lhs_poly = std::move(lhs);
  r.rhs_poly = std::move(rhs);
  r.diff_poly = std::move(diff);
  return r;
}

IdentityReport rat_report(std::string name, Params params, BigRat lhs, BigRat rhs) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  BigRat diff = lhs - rhs;
  r.holds = (diff == 0);
  r.lhs_rat = std::move(lhs);
  r.rhs_rat = std::move(rhs);
  r.diff_rat = std::move(diff);
  return r;
}

Params named(std::initializer_list<std::pair<const char*, const BigInt*>> items) {
  Params p;
  for (const auto& [k, v] : items) p.emplace_back(k, to_string(*v));
  return p;
}

LaurentPoly var_minus_one(int dim, int i) {
  ExpVec e(dim, 0);
  e[i] = 1;
  LaurentPoly p = LaurentPoly::monomial(e);
  p.add_term(ExpVec(dim, 0), BigInt(-1));
  return p;
}

void require_coprime_pair(const BigInt& a, const BigInt& b, const char* who) {
  if (a < 1 || b < 1)
    throw std::domain_error(std::string(who) + ": parameters must be >= 1");
  if (gcd(a, b) != 1)
    throw std::domain_error(std::string(who) + ": parameters must be coprime");
}

}  // namespace

IdentityReport check_carlitz(const BigInt& a, const BigInt& b) {
  require_coprime_pair(a, b, "check_carlitz");
  const LaurentPoly cab = carlitz_2d(a, b).polynomial;
  const LaurentPoly cba = carlitz_2d(b, a).polynomial.substitute({{0, 1}, {1, 0}});
  const LaurentPoly u1 = var_minus_one(2, 0);
  const LaurentPoly v1 = var_minus_one(2, 1);
  LaurentPoly lhs = v1 * cab + u1 * cba;
  LaurentPoly rhs = LaurentPoly::monomial({to_exp(a - 1), to_exp(b - 1)});
  rhs.add_term({0, 0}, BigInt(-1));
  return poly_report("carlitz_reciprocity", named({{"a", &a}, {"b", &b}}),
                     std::move(lhs), std::move(rhs));
}

IdentityReport check_berndt_dieter(const std::vector<BigInt>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2)
    throw std::domain_error("check_berndt_dieter: need at least two parameters");
  for (const BigInt& ai : a)
    if (ai < 1)
      throw std::domain_error("check_berndt_dieter: parameters must be >= 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gcd(a[i], a[j]) != 1)
        throw std::domain_error("check_berndt_dieter: parameters must be pairwise coprime");

  LaurentPoly lhs(n);
  for (int j = 0; j < n; ++j) {
    // Rotation placing index j last: (a_{j+1}, ..., a_n, a_1, ..., a_j).
    std::vector<BigInt> rotated(n);
    std::vector<ExpVec> images(n);
    for (int i = 0; i < n; ++i) {
      const int orig = (j + 1 + i) % n;
      rotated[i] = a[orig];
      images[i] = ExpVec(n, 0);
      images[i][orig] = 1;
    }
    lhs += var_minus_one(n, j) * carlitz_nd(rotated).polynomial.substitute(images);
  }
  ExpVec top(n);
  for (int i = 0; i < n; ++i) top[i] = to_exp(a[i] - 1);
  LaurentPoly rhs = LaurentPoly::monomial(top);
  rhs.add_term(ExpVec(n, 0), BigInt(-1));

  Params params;
  for (int i = 0; i < n; ++i)
    params.emplace_back("a" + std::to_string(i + 1), to_string(a[i]));
  return poly_report("berndt_dieter_reciprocity", std::move(params), std::move(lhs),
                     std::move(rhs));
}

IdentityReport check_dedekind(const BigInt& a, const BigInt& b) {
  require_coprime_pair(a, b, "check_dedekind");
  BigRat lhs = dedekind_direct(a, b) + dedekind_direct(b, a);
  BigRat rhs = BigRat(-1, 4) + make_rat(a * a + b * b + 1, BigInt(12) * a * b);
  return rat_report("dedekind_reciprocity", named({{"a", &a}, {"b", &b}}),
                    std::move(lhs), std::move(rhs));
}

IdentityReport check_two_ray(const BigInt& a, const BigInt& b, const BigInt& c,
                             const BigInt& d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::domain_error("check_two_ray: ray entries must be >= 1");
  if (gcd(a, b) != 1 || gcd(c, d) != 1)
    throw std::domain_error("check_two_ray: rays must be primitive");
  const BigInt q = a * d - b * c;
  if (q < 1)
    throw orientation_error("check_two_ray: rays must span positively (ad - bc >= 1)");

  const Exp ea = to_exp(a), eb = to_exp(b), ec = to_exp(c), ed = to_exp(d);
  const LaurentPoly u1 = var_minus_one(2, 0);
  const LaurentPoly v1 = var_minus_one(2, 1);
  LaurentPoly uab1 = LaurentPoly::monomial({ea, eb});
  uab1.add_term({0, 0}, BigInt(-1));
  LaurentPoly ucd1 = LaurentPoly::monomial({ec, ed});
  ucd1.add_term({0, 0}, BigInt(-1));
  const LaurentPoly uv = LaurentPoly::monomial({1, 1});
  const LaurentPoly cab = carlitz_2d(a, b).polynomial;
  const LaurentPoly cdc = carlitz_2d(d, c).polynomial.substitute({{0, 1}, {1, 0}});

  // u^{a+c} v^{b+d} - u^a v^b (uv - v + 1) - u^c v^d (uv - u + 1) + uv
  LaurentPoly rhs = LaurentPoly::monomial({ea + ec, eb + ed});
  LaurentPoly uvv1 = uv;  // uv - v + 1
  uvv1.add_term({0, 1}, BigInt(-1));
  uvv1.add_term({0, 0}, BigInt(1));
  LaurentPoly uvu1 = uv;  // uv - u + 1
  uvu1.add_term({1, 0}, BigInt(-1));
  uvu1.add_term({0, 0}, BigInt(1));
  rhs -= uvv1.mul_monomial({ea, eb});
  rhs -= uvu1.mul_monomial({ec, ed});
  rhs += uv;

  auto lhs_for = [&](const BigInt& x, const BigInt& y) {
    const BigInt p = c * x + d * y;
    LaurentPoly inner =
        carlitz_floor_poly(p, q).substitute({{ea, eb}, {to_exp(-y), to_exp(x)}});
    LaurentPoly shifted = inner.mul_monomial({to_exp(a - y), to_exp(b + x)});
    return uv * u1 * uab1 * cdc + uv * v1 * ucd1 * cab + u1 * v1 * shifted;
  };

  const Bezout bz = egcd(a, b);
  IdentityReport report =
      poly_report("two_ray_transform", named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}),
                  lhs_for(bz.x, bz.y), std::move(rhs));
  // The closed form may not depend on the Bezout pair; re-verify with two
  // shifted pairs (x + tb, y - ta).
  for (int t : {-1, 1}) {
    if (!report.holds) break;
    LaurentPoly shifted_lhs = lhs_for(bz.x + t * b, bz.y - t * a);
    LaurentPoly diff = shifted_lhs - *report.rhs_poly;
    if (!diff.is_zero()) {
      report.holds = false;
      report.lhs_poly = std::move(shifted_lhs);
      report.diff_poly = std::move(diff);
    }
  }
  return report;
}

IdentityReport check_unimodular_cor(const BigInt& a, const BigInt& b, const BigInt& c,
                                    const BigInt& d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::domain_error("check_unimodular_cor: ray entries must be >= 1");
  if (a * d - b * c != 1)
    throw std::domain_error("check_unimodular_cor: requires ad - bc = 1");
  const Exp ea = to_exp(a), eb = to_exp(b), ec = to_exp(c), ed = to_exp(d);
  const LaurentPoly u1 = var_minus_one(2, 0);
  const LaurentPoly v1 = var_minus_one(2, 1);
  LaurentPoly uab1 = LaurentPoly::monomial({ea, eb});
  uab1.add_term({0, 0}, BigInt(-1));
  LaurentPoly ucd1 = LaurentPoly::monomial({ec, ed});
  ucd1.add_term({0, 0}, BigInt(-1));
  const LaurentPoly cab = carlitz_2d(a, b).polynomial;
  const LaurentPoly cdc = carlitz_2d(d, c).polynomial.substitute({{0, 1}, {1, 0}});

  LaurentPoly lhs = u1 * uab1 * cdc + v1 * ucd1 * cab;
  LaurentPoly rhs(2);
  rhs.add_term({ea + ec - 1, eb + ed - 1}, BigInt(1));
  rhs.add_term({ea, eb}, BigInt(-1));
  rhs.add_term({ec, ed}, BigInt(-1));
  rhs.add_term({ea - 1, eb}, BigInt(1));
  rhs.add_term({ec, ed - 1}, BigInt(1));
  rhs.add_term({ea - 1, eb - 1}, BigInt(-1));
  rhs.add_term({ec - 1, ed - 1}, BigInt(-1));
  rhs.add_term({0, 0}, BigInt(1));
  return poly_report("unimodular_two_ray",
                     named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}), std::move(lhs),
                     std::move(rhs));
}

IdentityReport check_pommersheim_3term(const BigInt& a, const BigInt& b, const BigInt& c,
                                       const BigInt& d) {
  require_coprime_pair(a, b, "check_pommersheim_3term");
  require_coprime_pair(c, d, "check_pommersheim_3term");
  const Bezout bz = egcd(a, b);
  const BigInt e = a * d + b * c;
  BigRat lhs = dedekind_direct(a, b) + dedekind_direct(c, d);
  BigRat rhs = dedekind_direct(c * bz.x - d * bz.y, e) - BigRat(1, 4) +
               (make_rat(b, d * e) + make_rat(d, b * e) + make_rat(e, b * d)) / BigRat(12);
  return rat_report("pommersheim_three_term",
                    named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}), std::move(lhs),
                    std::move(rhs));
}

IdentityReport check_rademacher_3term(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error("check_rademacher_3term: parameters must be >= 1");
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
    throw std::domain_error("check_rademacher_3term: parameters must be pairwise coprime");
  auto inv_mod = [](const BigInt& value, const BigInt& modulus) {
    return floor_mod(egcd(value, modulus).x, modulus);
  };
  BigRat lhs = dedekind_direct(a * inv_mod(b, c), c) +
               dedekind_direct(c * inv_mod(a, b), b) +
               dedekind_direct(b * inv_mod(c, a), a);
  BigRat rhs = BigRat(-1, 4) + (make_rat(a, b * c) + make_rat(b, c * a) +
                                make_rat(c, a * b)) /
                                   BigRat(12);
  return rat_report("rademacher_three_term", named({{"a", &a}, {"b", &b}, {"c", &c}}),
                    std::move(lhs), std::move(rhs));
}

IdentityReport check_rademacher_abcd(const BigInt& a, const BigInt& b, const BigInt& c,
                                     const BigInt& d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::domain_error("check_rademacher_abcd: parameters must be >= 1");
  if (a * d - b * c != 1)
    throw std::domain_error("check_rademacher_abcd: requires ad - bc = 1");
  BigRat lhs = dedekind_direct(a, b) + dedekind_direct(d, c);
  BigRat rhs = BigRat(-1, 2) + (make_rat(a, b) + make_rat(a, c) + make_rat(d, b) +
                                make_rat(d, c)) /
                                   BigRat(12);
  return rat_report("rademacher_two_sum",
                    named({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}), std::move(lhs),
                    std::move(rhs));
}

namespace {

// Shared core: cones must tile the orthant, i.e. their transforms sum to
// prod_i 1/(1 - z_i); checked by clearing denominators and, independently, by
// comparing truncated expansions.
IdentityReport quadrant_report(std::string name, Params params,
                               const std::vector<SimplicialCone>& cones, int dim,
                               Exp expansion_degree) {
  ShortRatFun total(dim);
  for (const auto& k : cones) total += cone_ipt(k);

  std::vector<std::pair<ExpVec, BinOrient>> raw;
  for (int i = 0; i < dim; ++i) {
    ExpVec e(dim, 0);
    e[i] = 1;
    raw.emplace_back(e, BinOrient::kOneMinusZ);
  }
  ShortRatFun orthant(dim);
  orthant.add_term(1, LaurentPoly::constant(dim, BigInt(1)), raw);

  auto [lhs, rhs] = clear_denominators(total, orthant);
  IdentityReport report = poly_report(std::move(name), std::move(params),
                                      std::move(lhs), std::move(rhs));
  if (report.holds) {
    const ExpVec grading(dim, 1);
    LaurentPoly series_lhs = expand_truncated(total, grading, expansion_degree);
    LaurentPoly series_rhs = expand_truncated(orthant, grading, expansion_degree);
    if (!(series_lhs == series_rhs)) {
      report.holds = false;
      report.lhs_poly = std::move(series_lhs);
      report.rhs_poly = std::move(series_rhs);
      report.diff_poly = *report.lhs_poly - *report.rhs_poly;
    }
  }
  return report;
}

}  // namespace

IdentityReport check_quadrant_decomposition(const BigInt& a, const BigInt& b) {
  require_coprime_pair(a, b, "check_quadrant_decomposition");
  const Exp ea = to_exp(a), eb = to_exp(b);
  std::vector<SimplicialCone> cones;
  cones.emplace_back(ExpVec{0, 0}, std::vector<ExpVec>{{0, 1}, {ea, eb}},
                     std::vector<bool>{false, false});
  cones.emplace_back(ExpVec{0, 0}, std::vector<ExpVec>{{1, 0}, {ea, eb}},
                     std::vector<bool>{true, false});
  return quadrant_report("quadrant_decomposition", named({{"a", &a}, {"b", &b}}), cones,
                         2, 8);
}

IdentityReport check_quadrant_decomposition(const std::vector<BigInt>& a) {
  std::vector<SimplicialCone> cones = orthant_decomposition(a);
  Params params;
  for (std::size_t i = 0; i < a.size(); ++i)
    params.emplace_back("a" + std::to_string(i + 1), to_string(a[i]));
  return quadrant_report("orthant_decomposition", std::move(params), cones,
                         static_cast<int>(a.size()), 6);
}

}  // namespace carlitz
