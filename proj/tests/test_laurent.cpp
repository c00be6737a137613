#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "carlitz/laurent.hpp"

using namespace carlitz;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int dim, int nterms, Exp lo, Exp hi) {
  std::uniform_int_distribution<Exp> exp_dist(lo, hi);
  std::uniform_int_distribution<long> coeff_dist(-9, 9);
  LaurentPoly p(dim);
  for (int t = 0; t < nterms; ++t) {
    ExpVec e(dim);
    for (int i = 0; i < dim; ++i) e[i] = exp_dist(rng);
    p.add_term(e, BigInt(coeff_dist(rng)));
  }
  return p;
}

// One partial derivative step as an explicit polynomial, for the oracle.
LaurentPoly derive_once(const LaurentPoly& p, int var) {
  LaurentPoly out(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    ExpVec ne = e;
    ne[var] -= 1;
    out.add_term(ne, c * BigInt(e[var]));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial and constant construction") {
  LaurentPoly m = LaurentPoly::monomial({2, -1}, 3);
  CHECK(m.dim() == 2);
  CHECK(m.term_count() == 1);
  CHECK(m.coeff({2, -1}) == 3);
  CHECK(m.coeff({0, 0}) == 0);
  CHECK(LaurentPoly::constant(3, 0).is_zero());
  CHECK(LaurentPoly::monomial({1, 1}, 0).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p(2);
  p.add_term({1, 2}, 5);
  p.add_term({1, 2}, -5);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  LaurentPoly q = LaurentPoly::monomial({0, 1}) - LaurentPoly::monomial({0, 1});
  CHECK(q == LaurentPoly(2));
}

TEST_CASE("dimension mismatches are rejected") {
  LaurentPoly p(2), q(3);
  CHECK_THROWS_AS(p += q, std::invalid_argument);
  CHECK_THROWS_AS(p * q, std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.eval({BigRat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly(0), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    LaurentPoly a = random_poly(rng, dim, 6, -4, 4);
    LaurentPoly b = random_poly(rng, dim, 6, -4, 4);
    LaurentPoly c = random_poly(rng, dim, 6, -4, 4);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == LaurentPoly(dim));
    REQUIRE(a * LaurentPoly::constant(dim, 1) == a);
    REQUIRE((a * LaurentPoly(dim)).is_zero());
    REQUIRE(a + (-a) == LaurentPoly(dim));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::vector<BigRat> pt{BigRat(3, 2), BigRat(-2, 5)};
  for (int trial = 0; trial < 25; ++trial) {
    LaurentPoly a = random_poly(rng, 2, 5, -3, 3);
    LaurentPoly b = random_poly(rng, 2, 5, -3, 3);
    REQUIRE((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    REQUIRE((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("evaluation with negative exponents and poles") {
  LaurentPoly p = LaurentPoly::monomial({-2, 1}, 3);  // 3 u^{-2} v
  CHECK(p.eval({BigRat(2), BigRat(5)}) == BigRat(15, 4));
  CHECK_THROWS_AS(p.eval({BigRat(0), BigRat(1)}), pole_error);
  // zero base with nonnegative exponents is fine
  LaurentPoly q = LaurentPoly::monomial({2, 0}, 7);
  CHECK(q.eval({BigRat(0), BigRat(9)}) == 0);
}

TEST_CASE("derivative_at_one matches the explicit derivative oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    LaurentPoly p = random_poly(rng, dim, 7, -5, 5);
    std::vector<Exp> order(dim);
    for (int i = 0; i < dim; ++i) order[i] = static_cast<Exp>(rng() % 4);
    LaurentPoly d = p;
    for (int i = 0; i < dim; ++i)
      for (Exp k = 0; k < order[i]; ++k) d = derive_once(d, i);
    std::vector<BigRat> ones(dim, BigRat(1));
    REQUIRE(p.derivative_at_one(order) == d.eval(ones));
  }
}

TEST_CASE("substitution is exact and composes with evaluation") {
  // p(u, v) -> p(x^2 y, x^{-1}) lands in new variables (x, y).
  LaurentPoly p(2);
  p.add_term({1, 0}, 2);
  p.add_term({0, 3}, -1);
  p.add_term({2, -1}, 5);
  LaurentPoly s = p.substitute({{2, 1}, {-1, 0}});
  CHECK(s.coeff({2, 1}) == 2);
  CHECK(s.coeff({-3, 0}) == -1);
  CHECK(s.coeff({5, 2}) == 5);

  std::mt19937_64 rng(5);
  std::vector<BigRat> pt{BigRat(3, 4), BigRat(7, 2)};
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly q = random_poly(rng, 2, 6, -3, 3);
    LaurentPoly qs = q.substitute({{2, 1}, {-1, 0}});
    BigRat x = pt[0], y = pt[1];
    std::vector<BigRat> image_pt{x * x * y, BigRat(1) / x};
    REQUIRE(qs.eval(pt) == q.eval(image_pt));
  }
  CHECK_THROWS_AS(p.substitute({{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(p.substitute({{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("substitution merges colliding monomials") {
  LaurentPoly p(2);
  p.add_term({1, 0}, 1);
  p.add_term({0, 1}, 1);
  // u -> t, v -> t: u + v -> 2t
  LaurentPoly s = p.substitute({{1}, {1}});
  CHECK(s.dim() == 1);
  CHECK(s.term_count() == 1);
  CHECK(s.coeff({1}) == 2);
}

TEST_CASE("printing uses conventional variable names") {
  LaurentPoly p(2);
  p.add_term({0, 0}, 1);
  p.add_term({1, 1}, 1);
  p.add_term({2, -1}, -3);
  CHECK(p.to_string() == "1 + u*v - 3*u^2*v^-1");
  CHECK(LaurentPoly(2).to_string() == "0");
  CHECK(default_var_names(3) == std::vector<std::string>{"u", "v", "w"});
  CHECK(default_var_names(4)[3] == "u4");
}

TEST_CASE("rat_pow handles negative exponents exactly") {
  CHECK(rat_pow(BigRat(2, 3), 3) == BigRat(8, 27));
  CHECK(rat_pow(BigRat(2, 3), -2) == BigRat(9, 4));
  CHECK(rat_pow(BigRat(5), 0) == 1);
  CHECK(rat_pow(BigRat(0), 4) == 0);
  CHECK_THROWS_AS(rat_pow(BigRat(0), -1), pole_error);
}
