#include "carlitz/brion.hpp"

#include <utility>

#include "carlitz/sums.hpp"

namespace carlitz {

namespace {

void require_positive3(const BigInt& a, const BigInt& b, const BigInt& c,
                       const char* who) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error(std::string(who) + ": parameters must be >= 1");
}

void require_pairwise_coprime3(const BigInt& a, const BigInt& b, const BigInt& c,
                               const char* who) {
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
    throw std::domain_error(std::string(who) + ": parameters must be pairwise coprime");
}

LaurentPoly var_minus_one(int dim, int i) {
  ExpVec e(dim, 0);
  e[i] = 1;
  LaurentPoly p = LaurentPoly::monomial(e);
  p.add_term(ExpVec(dim, 0), BigInt(-1));
  return p;
}

// z_i^{p} - z_j^{q}
LaurentPoly power_diff(int dim, int i, Exp p, int j, Exp q) {
  ExpVec e1(dim, 0), e2(dim, 0);
  e1[i] = p;
  e2[j] = q;
  LaurentPoly out = LaurentPoly::monomial(e1);
  out.add_term(e2, BigInt(-1));
  return out;
}

}  // namespace

BigRat EhrhartCubic::eval(const BigInt& t) const {
  const BigRat tt(t);
  return ((c3 * tt + c2) * tt + c1) * tt + c0;
}

std::array<ShortRatFun, 3> triangle_vertex_cones(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1)
    throw std::domain_error("triangle_vertex_cones: legs must be >= 1");
  if (gcd(a, b) != 1)
    throw std::domain_error("triangle_vertex_cones: legs must be coprime");
  const Exp ea = to_exp(a), eb = to_exp(b);
  SimplicialCone at_origin({0, 0}, {{1, 0}, {0, 1}}, {false, false});
  SimplicialCone at_a0({ea, 0}, {{-1, 0}, {-ea, eb}}, {false, false});
  SimplicialCone at_0b({0, eb}, {{ea, -eb}, {0, -1}}, {false, false});
  return {cone_ipt(at_origin), cone_ipt(at_a0), cone_ipt(at_0b)};
}

LaurentPoly triangle_lattice_poly(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1)
    throw std::domain_error("triangle_lattice_poly: legs must be >= 1");
  // bx + ay <= ab, x, y >= 0
  LaurentPoly p(2);
  const BigInt ab = a * b;
  for (BigInt x(0); x <= a; ++x) {
    const BigInt ymax = floor_div(ab - b * x, a);
    for (BigInt y(0); y <= ymax; ++y)
      p.add_term({to_exp(x), to_exp(y)}, BigInt(1));
  }
  return p;
}

std::pair<LaurentPoly, LaurentPoly> triangle_identity_sides(const BigInt& a,
                                                            const BigInt& b) {
  if (a < 1 || b < 1)
    throw std::domain_error("triangle_identity_sides: legs must be >= 1");
  if (gcd(a, b) != 1)
    throw std::domain_error("triangle_identity_sides: legs must be coprime");
  const Exp ea = to_exp(a), eb = to_exp(b);

  const LaurentPoly u1 = var_minus_one(2, 0);
  const LaurentPoly v1 = var_minus_one(2, 1);
  LaurentPoly lhs = u1 * v1 * triangle_lattice_poly(a, b);

  // (v-1) [u^a v c(u^{-1}, v; a, b) + u^{a+1} + u v^b] - (v^{b+1} - 1)
  LaurentPoly cinv = carlitz_2d(a, b).polynomial.substitute({{-1, 0}, {0, 1}});
  LaurentPoly bracket = cinv.mul_monomial({ea, 1});
  bracket.add_term({ea + 1, 0}, BigInt(1));
  bracket.add_term({1, eb}, BigInt(1));
  LaurentPoly rhs = v1 * bracket;
  rhs.add_term({0, eb + 1}, BigInt(-1));
  rhs.add_term({0, 0}, BigInt(1));
  return {std::move(lhs), std::move(rhs)};
}

LaurentPoly tetrahedron_lattice_poly(const BigInt& a, const BigInt& b, const BigInt& c,
                                     const BigInt& t) {
  require_positive3(a, b, c, "tetrahedron_lattice_poly");
  if (t < 1)
    throw std::domain_error("tetrahedron_lattice_poly: dilation must be >= 1");
  // bcx + cay + abz <= abct, coordinates >= 0
  LaurentPoly p(3);
  const BigInt volume = a * b * c * t;
  for (BigInt x(0); x <= a * t; ++x) {
    const BigInt rem_x = volume - b * c * x;
    const BigInt ymax = floor_div(rem_x, a * c);
    for (BigInt y(0); y <= ymax; ++y) {
      const BigInt zmax = floor_div(rem_x - a * c * y, a * b);
      for (BigInt z(0); z <= zmax; ++z)
        p.add_term({to_exp(x), to_exp(y), to_exp(z)}, BigInt(1));
    }
  }
  return p;
}

LaurentPoly tetrahedron_denominator(const BigInt& a, const BigInt& b, const BigInt& c) {
  require_positive3(a, b, c, "tetrahedron_denominator");
  const Exp ea = to_exp(a), eb = to_exp(b), ec = to_exp(c);
  return var_minus_one(3, 0) * var_minus_one(3, 1) * var_minus_one(3, 2) *
         power_diff(3, 0, ea, 1, eb) * power_diff(3, 0, ea, 2, ec) *
         power_diff(3, 1, eb, 2, ec);
}

LaurentPoly tetrahedron_rhs(const BigInt& a, const BigInt& b, const BigInt& c,
                            const BigInt& t) {
  require_positive3(a, b, c, "tetrahedron_rhs");
  require_pairwise_coprime3(a, b, c, "tetrahedron_rhs");
  if (t < 1) throw std::domain_error("tetrahedron_rhs: dilation must be >= 1");
  const Exp ea = to_exp(a), eb = to_exp(b), ec = to_exp(c);
  const Exp sa = to_exp((t + 2) * a), sb = to_exp((t + 2) * b), sc = to_exp((t + 2) * c);

  const LaurentPoly u1 = var_minus_one(3, 0);
  const LaurentPoly v1 = var_minus_one(3, 1);
  const LaurentPoly w1 = var_minus_one(3, 2);
  const LaurentPoly uv = power_diff(3, 0, ea, 1, eb);  // u^a - v^b
  const LaurentPoly uw = power_diff(3, 0, ea, 2, ec);  // u^a - w^c
  const LaurentPoly vw = power_diff(3, 1, eb, 2, ec);  // v^b - w^c

  // drc sums with the first variable inverted and the variables permuted into
  // the ambient (u, v, w) order.
  LaurentPoly drc_u =
      drc_sum(a, b, c).substitute({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  LaurentPoly drc_v =
      drc_sum(b, a, c).substitute({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  LaurentPoly drc_w =
      drc_sum(c, a, b).substitute({{0, 0, -1}, {1, 0, 0}, {0, 1, 0}});

  LaurentPoly rhs = (v1 * w1 * vw * (u1 + drc_u)).mul_monomial({sa, 0, 0});
  rhs -= (u1 * w1 * uw * (v1 + drc_v)).mul_monomial({0, sb, 0});
  rhs += (u1 * v1 * uv * (w1 + drc_w)).mul_monomial({0, 0, sc});
  rhs -= uv * uw * vw;
  return rhs;
}

std::pair<LaurentPoly, LaurentPoly> tetrahedron_sides(const BigInt& a, const BigInt& b,
                                                      const BigInt& c, const BigInt& t) {
  LaurentPoly rhs = tetrahedron_rhs(a, b, c, t);
  LaurentPoly lhs = tetrahedron_denominator(a, b, c) * tetrahedron_lattice_poly(a, b, c, t);
  return {std::move(lhs), std::move(rhs)};
}

BigInt count_tetrahedron(const BigInt& a, const BigInt& b, const BigInt& c,
                         const BigInt& t) {
  require_positive3(a, b, c, "count_tetrahedron");
  if (t < 0) throw std::domain_error("count_tetrahedron: dilation must be >= 0");
  BigInt total(0);
  const BigInt volume = a * b * c * t;
  for (BigInt x(0); x <= a * t; ++x) {
    const BigInt rem_x = volume - b * c * x;
    const BigInt ymax = floor_div(rem_x, a * c);
    for (BigInt y(0); y <= ymax; ++y)
      total += floor_div(rem_x - a * c * y, a * b) + 1;
  }
  return total;
}

EhrhartCubic ehrhart_mp(const BigInt& a, const BigInt& b, const BigInt& c) {
  require_positive3(a, b, c, "ehrhart_mp");
  require_pairwise_coprime3(a, b, c, "ehrhart_mp");
  EhrhartCubic e;
  e.c3 = make_rat(a * b * c, BigInt(6));
  e.c2 = make_rat(a * b + a * c + b * c + 1, BigInt(4));
  e.c1 = BigRat(3, 4) + make_rat(a + b + c, BigInt(4)) +
         (make_rat(b * c, a) + make_rat(c * a, b) + make_rat(a * b, c) +
          make_rat(BigInt(1), a * b * c)) /
             BigRat(12) -
         dedekind_fast(b * c, a) - dedekind_fast(c * a, b) - dedekind_fast(a * b, c);
  e.c0 = BigRat(1);
  return e;
}

BigRat ehrhart_via_lhospital(const BigInt& a, const BigInt& b, const BigInt& c,
                             const BigInt& t) {
  return lhospital_limit(tetrahedron_rhs(a, b, c, t), tetrahedron_denominator(a, b, c),
                         {1, 2, 3});
}

}  // namespace carlitz
