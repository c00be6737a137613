#include "carlitz/cones.hpp"

#include <algorithm>
#include <utility>

#include "carlitz/sums.hpp"

namespace carlitz {

namespace {

using Mat = std::vector<std::vector<BigInt>>;

// Fraction-free (Bareiss) determinant; all divisions are exact.
BigInt det_of(Mat m) {
  const int n = static_cast<int>(m.size());
  BigInt sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return BigInt(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Matrix whose column j is the j-th generator.
Mat generator_columns(const std::vector<ExpVec>& gens) {
  const int n = static_cast<int>(gens.size());
  Mat m(n, std::vector<BigInt>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = BigInt(gens[c][r]);
  return m;
}

// Cramer numerators of G * lambda = rhs: numer[i] = det(G with column i
// replaced by rhs), so lambda_i = numer[i] / det(G).
std::vector<BigInt> cramer_numerators(const std::vector<ExpVec>& gens,
                                      const std::vector<BigInt>& rhs) {
  const int n = static_cast<int>(gens.size());
  std::vector<BigInt> numer(n);
  for (int i = 0; i < n; ++i) {
    Mat m = generator_columns(gens);
    for (int r = 0; r < n; ++r) m[r][i] = rhs[r];
    numer[i] = det_of(std::move(m));
  }
  return numer;
}

BigInt dot(const ExpVec& a, const ExpVec& b) {
  BigInt s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += BigInt(a[i]) * BigInt(b[i]);
  return s;
}

}  // namespace

SimplicialCone::SimplicialCone(ExpVec apex, std::vector<ExpVec> generators,
                               std::vector<bool> open)
    : apex_(std::move(apex)), generators_(std::move(generators)), open_(std::move(open)) {
  const std::size_t n = generators_.size();
  if (n == 0) throw std::invalid_argument("SimplicialCone: no generators");
  if (apex_.size() != n)
    throw std::invalid_argument("SimplicialCone: apex dimension mismatch");
  for (const auto& g : generators_)
    if (g.size() != n)
      throw std::invalid_argument("SimplicialCone: generator dimension mismatch");
  if (open_.size() != n)
    throw std::invalid_argument("SimplicialCone: one openness flag per generator required");
  det_ = det_of(generator_columns(generators_));
  if (det_ == 0)
    throw std::domain_error("SimplicialCone: generators are linearly dependent");
}

BigInt SimplicialCone::abs_det() const { return abs(det_); }

bool SimplicialCone::contains(const ExpVec& point) const {
  const int n = dim();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("SimplicialCone::contains: point dimension mismatch");
  std::vector<BigInt> rhs(n);
  for (int r = 0; r < n; ++r) rhs[r] = BigInt(point[r]) - BigInt(apex_[r]);
  std::vector<BigInt> numer = cramer_numerators(generators_, rhs);
  for (int i = 0; i < n; ++i) {
    // lambda_i = numer[i]/det_; nd is its numerator against |det_|.
    BigInt nd = (det_ < 0) ? BigInt(-numer[i]) : numer[i];
    if (open_[i] ? nd <= 0 : nd < 0) return false;
  }
  return true;
}

FundParLattice fundpar_points(const SimplicialCone& cone) {
  const int n = cone.dim();
  const BigInt absdet = cone.abs_det();

  // Bounding box over the 2^n parallelepiped corners apex + sum_{i in S} g_i.
  std::vector<BigInt> lo(n), hi(n);
  for (int r = 0; r < n; ++r) lo[r] = hi[r] = BigInt(cone.apex()[r]);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    for (int r = 0; r < n; ++r) {
      BigInt corner(cone.apex()[r]);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) corner += BigInt(cone.generators()[i][r]);
      if (corner < lo[r]) lo[r] = corner;
      if (corner > hi[r]) hi[r] = corner;
    }
  }

  std::vector<ExpVec> points;
  ExpVec p(n);
  std::vector<Exp> lo_e(n), hi_e(n);
  for (int r = 0; r < n; ++r) {
    lo_e[r] = to_exp(lo[r]);
    hi_e[r] = to_exp(hi[r]);
    p[r] = lo_e[r];
  }
  std::vector<BigInt> rhs(n);
  while (true) {
    for (int r = 0; r < n; ++r) rhs[r] = BigInt(p[r]) - BigInt(cone.apex()[r]);
    std::vector<BigInt> numer = cramer_numerators(cone.generators(), rhs);
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      BigInt nd = (cone.det() < 0) ? BigInt(-numer[i]) : numer[i];
      // lambda_i in [0,1) for closed generators, (0,1] for open ones.
      inside = cone.open_flags()[i] ? (nd > 0 && nd <= absdet) : (nd >= 0 && nd < absdet);
    }
    if (inside) points.push_back(p);
    int r = n - 1;
    while (r >= 0 && p[r] == hi_e[r]) {
      p[r] = lo_e[r];
      --r;
    }
    if (r < 0) break;
    ++p[r];
  }
  std::sort(points.begin(), points.end());
  return FundParLattice{cone, std::move(points)};
}

ShortRatFun cone_ipt(const SimplicialCone& cone) {
  FundParLattice fp = fundpar_points(cone);
  const int n = cone.dim();
  LaurentPoly numer(n);
  for (const auto& p : fp.points) numer.add_term(p, BigInt(1));
  std::vector<std::pair<ExpVec, BinOrient>> raw;
  raw.reserve(n);
  for (const auto& g : cone.generators()) raw.emplace_back(g, BinOrient::kOneMinusZ);
  ShortRatFun f(n);
  f.add_term(1, numer, raw);
  return f;
}

std::vector<SimplicialCone> orthant_decomposition(const std::vector<BigInt>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 2)
    throw std::domain_error("orthant_decomposition: need at least two coordinates");
  ExpVec av(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] < 1)
      throw std::domain_error("orthant_decomposition: coordinates must be >= 1");
    av[i] = to_exp(a[i]);
  }
  std::vector<SimplicialCone> cones;
  cones.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<ExpVec> gens(n, ExpVec(n, 0));
    for (int i = 0; i < n; ++i)
      if (i != j) gens[i][i] = 1;
    gens[j] = av;
    std::vector<bool> open(n, false);
    for (int i = 0; i < j; ++i) open[i] = true;
    cones.emplace_back(ExpVec(n, 0), std::move(gens), std::move(open));
  }
  return cones;
}

ShortRatFun cone_transform_2d(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::domain_error("cone_transform_2d: ray entries must be >= 1");
  Bezout bz = egcd(a, b);
  return cone_transform_2d(a, b, c, d, bz.x, bz.y);
}

ShortRatFun cone_transform_2d(const BigInt& a, const BigInt& b, const BigInt& c,
                              const BigInt& d, const BigInt& x, const BigInt& y) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::domain_error("cone_transform_2d: ray entries must be >= 1");
  if (gcd(a, b) != 1 || gcd(c, d) != 1)
    throw std::domain_error("cone_transform_2d: rays must be primitive");
  const BigInt q = a * d - b * c;
  if (q < 1)
    throw orientation_error(
        "cone_transform_2d: rays must span positively (ad - bc >= 1)");
  if (a * x + b * y != 1)
    throw std::domain_error("cone_transform_2d: x, y is not a Bezout pair for (a, b)");
  const BigInt p = c * x + d * y;
  if (gcd(p, q) != 1)
    throw std::logic_error("cone_transform_2d: transformed slope not coprime to the index");

  // sigma = (1 + u^{a-y} v^{b+x} * C(U,V)) / ((u^a v^b - 1)(u^c v^d - 1))
  // with C the floor-exponent sum for slope p = cx+dy, modulus q = ad-bc,
  // evaluated at U = u^a v^b, V = u^{-y} v^x.
  const Exp ea = to_exp(a), eb = to_exp(b), ec = to_exp(c), ed = to_exp(d);
  const Exp ex = to_exp(x), ey = to_exp(y);
  LaurentPoly inner = carlitz_floor_poly(p, q).substitute({{ea, eb}, {-ey, ex}});
  LaurentPoly numer = LaurentPoly::constant(2, BigInt(1)) +
                      inner.mul_monomial({ea - ey, eb + ex});
  ShortRatFun f(2);
  f.add_term(1, numer,
             {{{ea, eb}, BinOrient::kZMinusOne}, {{ec, ed}, BinOrient::kZMinusOne}});
  return f;
}

LaurentPoly brute_force_cone_points(const SimplicialCone& cone, const ExpVec& grading,
                                    Exp degree) {
  const int n = cone.dim();
  if (static_cast<int>(grading.size()) != n)
    throw std::invalid_argument("brute_force_cone_points: grading dimension mismatch");
  std::vector<BigInt> steps(n);
  for (int i = 0; i < n; ++i) {
    steps[i] = dot(grading, cone.generators()[i]);
    if (steps[i] <= 0)
      throw grading_error(
          "brute_force_cone_points: grading not strictly positive on a generator");
  }
  LaurentPoly out(n);
  const BigInt slack = BigInt(degree) - dot(grading, cone.apex());
  if (slack < 0) return out;

  // Any cone point with weight <= degree has lambda_i <= slack/steps[i], so a
  // box over those lambda ranges covers every candidate.
  std::vector<BigInt> lo(n), hi(n);
  for (int r = 0; r < n; ++r) lo[r] = hi[r] = BigInt(cone.apex()[r]);
  for (int i = 0; i < n; ++i) {
    const BigInt mi = floor_div(slack, steps[i]);
    for (int r = 0; r < n; ++r) {
      const BigInt reach = mi * BigInt(cone.generators()[i][r]);
      if (reach < 0) lo[r] += reach;
      if (reach > 0) hi[r] += reach;
    }
  }

  ExpVec p(n);
  std::vector<Exp> lo_e(n), hi_e(n);
  for (int r = 0; r < n; ++r) {
    lo_e[r] = to_exp(lo[r]);
    hi_e[r] = to_exp(hi[r]);
    p[r] = lo_e[r];
  }
  while (true) {
    if (dot(grading, p) <= degree && cone.contains(p)) out.add_term(p, BigInt(1));
    int r = n - 1;
    while (r >= 0 && p[r] == hi_e[r]) {
      p[r] = lo_e[r];
      --r;
    }
    if (r < 0) break;
    ++p[r];
  }
  return out;
}

namespace {

BigInt det2(const ExpVec& g, const ExpVec& h) {
  return BigInt(g[0]) * BigInt(h[1]) - BigInt(g[1]) * BigInt(h[0]);
}

void emit_unimodular_cone(ShortRatFun& out, int sign, const ExpVec& g, const ExpVec& h) {
  out.add_term(sign, LaurentPoly::constant(2, BigInt(1)),
               {{g, BinOrient::kOneMinusZ}, {h, BinOrient::kOneMinusZ}});
}

void emit_ray(ShortRatFun& out, int sign, const ExpVec& r) {
  out.add_term(sign, LaurentPoly::constant(2, BigInt(1)), {{r, BinOrient::kOneMinusZ}});
}

// Signed inclusion-exclusion of the closed cone C(g, h) (det > 0) into
// unimodular closed cones and boundary rays; |det| at least halves each
// level, so the recursion depth and term count are O(log det).
void decompose2d(const ExpVec& g, const ExpVec& h, int sign, ShortRatFun& out) {
  const BigInt d = det2(g, h);
  if (d == 1) {
    emit_unimodular_cone(out, sign, g, h);
    return;
  }
  // w0 with det(g, w0) = 1 from a Bezout pair of g's coordinates.
  Bezout bz = egcd(BigInt(g[0]), BigInt(g[1]));
  ExpVec w = {to_exp(BigInt(-bz.y)), to_exp(bz.x)};
  // det(w + m*g, h) = det(w, h) + m*d: shift w so |det(w, h)| <= d/2.
  const BigInt e0 = det2(w, h);
  const BigInt r = floor_mod(-e0, d);  // m = floor(-e0/d) leaves det(w,h) = -r
  BigInt m = floor_div(-e0, d);
  BigInt e = -r;
  if (d - r < r) {
    m += 1;
    e = d - r;
  }
  w[0] += to_exp(BigInt(m * g[0]));
  w[1] += to_exp(BigInt(m * g[1]));

  if (e > 0) {
    // w strictly between g and h: C(g,h) = C(g,w) + C(w,h) - ray(w).
    emit_unimodular_cone(out, sign, g, w);
    emit_ray(out, -sign, w);
    decompose2d(w, h, sign, out);
  } else {
    // h strictly between g and w: C(g,h) = C(g,w) - C(h,w) + ray(h).
    emit_unimodular_cone(out, sign, g, w);
    emit_ray(out, sign, h);
    decompose2d(h, w, -sign, out);
  }
}

}  // namespace

ShortRatFun cone2d_ipt_short(const ExpVec& g, const ExpVec& h) {
  if (g.size() != 2 || h.size() != 2)
    throw std::invalid_argument("cone2d_ipt_short: rays must be two-dimensional");
  auto egcd2 = [](const ExpVec& v) { return gcd(BigInt(v[0]), BigInt(v[1])); };
  if (egcd2(g) != 1 || egcd2(h) != 1)
    throw std::domain_error("cone2d_ipt_short: rays must be primitive");
  if (det2(g, h) < 1)
    throw orientation_error("cone2d_ipt_short: rays must span positively (det >= 1)");
  ShortRatFun out(2);
  decompose2d(g, h, 1, out);
  return out;
}

}  // namespace carlitz
