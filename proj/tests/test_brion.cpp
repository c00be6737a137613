#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "carlitz/brion.hpp"
#include "carlitz/sums.hpp"

using namespace carlitz;

TEST_CASE("triangle_lattice_poly scans the right triangle") {
  // legs 1, 1: points (0,0), (1,0), (0,1)
  LaurentPoly t11 = triangle_lattice_poly(1, 1);
  CHECK(t11.term_count() == 3);
  CHECK(t11.coeff({0, 0}) == 1);
  CHECK(t11.coeff({1, 0}) == 1);
  CHECK(t11.coeff({0, 1}) == 1);
  // legs 2, 3: 2x + 3y... bx + ay <= ab with (a,b) = (2,3): 3x + 2y <= 6
  LaurentPoly t23 = triangle_lattice_poly(2, 3);
  CHECK(t23.term_count() == 7);
  CHECK(t23.coeff({2, 0}) == 1);
  CHECK(t23.coeff({0, 3}) == 1);
  CHECK(t23.coeff({1, 1}) == 1);
  CHECK(t23.coeff({2, 1}) == 0);
}

TEST_CASE("vertex cone transforms sum to the triangle transform pointwise") {
  const std::vector<std::pair<long, long>> legs{{1, 1}, {3, 4}, {5, 3}, {2, 7}};
  const std::vector<std::vector<BigRat>> points{
      {BigRat(2), BigRat(3)}, {BigRat(1, 2), BigRat(1, 5)}};
  for (auto [a, b] : legs) {
    auto cones = triangle_vertex_cones(a, b);
    LaurentPoly poly = triangle_lattice_poly(a, b);
    for (const auto& pt : points) {
      BigRat total = cones[0].value_at(pt) + cones[1].value_at(pt) + cones[2].value_at(pt);
      REQUIRE(total == poly.eval(pt));
    }
  }
  CHECK_THROWS_AS(triangle_vertex_cones(2, 4), std::domain_error);
}

TEST_CASE("triangle identity sides: frozen hand expansion for legs 1, 1") {
  auto [lhs, rhs] = triangle_identity_sides(1, 1);
  LaurentPoly expect(2);
  expect.add_term({0, 0}, 1);
  expect.add_term({0, 2}, -1);
  expect.add_term({1, 1}, -1);
  expect.add_term({1, 2}, 1);
  expect.add_term({2, 0}, -1);
  expect.add_term({2, 1}, 1);
  CHECK(lhs == expect);
  CHECK(rhs == expect);
}

TEST_CASE("triangle identity holds on a coprime grid") {
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b) {
      if (gcd(a, b) != 1) continue;
      auto [lhs, rhs] = triangle_identity_sides(a, b);
      REQUIRE(lhs == rhs);
    }
  CHECK_THROWS_AS(triangle_identity_sides(2, 4), std::domain_error);
  CHECK_THROWS_AS(triangle_identity_sides(0, 1), std::domain_error);
}

TEST_CASE("tetrahedron_lattice_poly and count agree") {
  for (long t = 0; t <= 3; ++t)
    CHECK(count_tetrahedron(1, 1, 1, t) == (t + 1) * (t + 2) * (t + 3) / 6);
  CHECK(tetrahedron_lattice_poly(1, 1, 1, 1).term_count() == 4);
  CHECK(tetrahedron_lattice_poly(2, 3, 5, 1).eval({BigRat(1), BigRat(1), BigRat(1)}) ==
        count_tetrahedron(2, 3, 5, 1));
  CHECK_THROWS_AS(tetrahedron_lattice_poly(1, 1, 1, 0), std::domain_error);
  CHECK_THROWS_AS(count_tetrahedron(1, 1, 1, -1), std::domain_error);
}

TEST_CASE("tetrahedron identity sides agree") {
  const std::vector<std::array<long, 4>> cases{
      {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 3, 1}, {2, 3, 5, 2}, {3, 4, 5, 1}};
  for (const auto& q : cases) {
    auto [lhs, rhs] = tetrahedron_sides(q[0], q[1], q[2], q[3]);
    REQUIRE(lhs == rhs);
  }
  CHECK_THROWS_AS(tetrahedron_sides(2, 4, 3, 1), std::domain_error);
}

TEST_CASE("tetrahedron_denominator lowest-order derivative at one") {
  // D = (u-1)(v-1)(w-1)(u^a - v^b)(u^a - w^c)(v^b - w^c) vanishes at 1 to
  // total order 6; the mixed (1,2,3) derivative there is -12*b*c^2.
  for (long a = 1; a <= 7; ++a)
    for (long b = 1; b <= 7; ++b)
      for (long c = 1; c <= 7; ++c) {
        if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) continue;
        LaurentPoly d = tetrahedron_denominator(a, b, c);
        REQUIRE(d.derivative_at_one({1, 2, 3}) == BigRat(-12 * b * c * c));
        // total order below 6 kills every mixed partial
        REQUIRE(d.derivative_at_one({1, 2, 2}) == 0);
        REQUIRE(d.derivative_at_one({0, 2, 3}) == 0);
        REQUIRE(d.derivative_at_one({1, 1, 3}) == 0);
      }
}

TEST_CASE("ehrhart_mp closed form for the unit tetrahedron") {
  EhrhartCubic e = ehrhart_mp(1, 1, 1);
  CHECK(e.c3 == BigRat(1, 6));
  CHECK(e.c2 == BigRat(1));
  CHECK(e.c1 == BigRat(11, 6));
  CHECK(e.c0 == BigRat(1));
  CHECK(e.eval(1) == 4);
  CHECK(e.eval(2) == 10);
  CHECK(e.eval(0) == 1);
  CHECK_THROWS_AS(ehrhart_mp(2, 4, 3), std::domain_error);
}

TEST_CASE("ehrhart_mp counts lattice points of every dilate") {
  const std::vector<std::array<long, 3>> triples{
      {1, 1, 1}, {1, 2, 3}, {2, 3, 5}, {3, 4, 5}, {1, 1, 7}};
  for (const auto& q : triples) {
    EhrhartCubic e = ehrhart_mp(q[0], q[1], q[2]);
    for (long t = 0; t <= 4; ++t)
      REQUIRE(e.eval(t) == count_tetrahedron(q[0], q[1], q[2], t));
  }
}

TEST_CASE("ehrhart_via_lhospital equals direct counting") {
  const std::vector<std::array<long, 4>> cases{
      {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 3, 1}, {2, 3, 5, 2}, {3, 4, 5, 1}};
  for (const auto& q : cases)
    REQUIRE(ehrhart_via_lhospital(q[0], q[1], q[2], q[3]) ==
            count_tetrahedron(q[0], q[1], q[2], q[3]));
}
