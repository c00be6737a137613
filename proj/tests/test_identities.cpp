#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "carlitz/cones.hpp"
#include "carlitz/identities.hpp"
#include "carlitz/sums.hpp"

using namespace carlitz;

namespace {

void require_holds_poly(const IdentityReport& r) {
  REQUIRE(r.holds);
  REQUIRE(r.lhs_poly.has_value());
  REQUIRE(r.rhs_poly.has_value());
  REQUIRE(r.diff_poly.has_value());
  REQUIRE(r.diff_poly->is_zero());
  REQUIRE(*r.lhs_poly == *r.rhs_poly);
}

void require_holds_rat(const IdentityReport& r) {
  REQUIRE(r.holds);
  REQUIRE(r.lhs_rat.has_value());
  REQUIRE(r.rhs_rat.has_value());
  REQUIRE(r.diff_rat.has_value());
  REQUIRE(*r.diff_rat == 0);
  REQUIRE(*r.lhs_rat == *r.rhs_rat);
}

}  // namespace

TEST_CASE("check_carlitz holds on coprime pairs and names its parameters") {
  IdentityReport r = check_carlitz(3, 5);
  require_holds_poly(r);
  CHECK(r.identity == "carlitz_reciprocity");
  REQUIRE(r.params.size() == 2);
  CHECK(r.params[0].first == "a");
  CHECK(r.params[0].second == "3");
  CHECK(r.params[1].second == "5");

  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b) {
      if (gcd(a, b) != 1) continue;
      require_holds_poly(check_carlitz(a, b));
      // the rational corollary holds whenever the polynomial identity does
      require_holds_rat(check_dedekind(a, b));
    }
  CHECK_THROWS_AS(check_carlitz(2, 4), std::domain_error);
  CHECK_THROWS_AS(check_carlitz(0, 1), std::domain_error);
}

TEST_CASE("check_berndt_dieter holds for cyclic tuples of any length") {
  const std::vector<std::vector<BigInt>> tuples{
      {2, 3}, {3, 5}, {2, 3, 5}, {1, 1, 1}, {3, 4, 5}, {2, 3, 5, 7}, {1, 2, 3, 5}};
  for (const auto& a : tuples) require_holds_poly(check_berndt_dieter(a));

  CHECK(check_berndt_dieter({2, 3, 5}).identity == "berndt_dieter_reciprocity");
  CHECK_THROWS_AS(check_berndt_dieter({6}), std::domain_error);
  CHECK_THROWS_AS(check_berndt_dieter({2, 4}), std::domain_error);
  CHECK_THROWS_AS(check_berndt_dieter({2, 3, 6}), std::domain_error);
}

TEST_CASE("berndt_dieter with n = 2 matches check_carlitz sides") {
  IdentityReport bd = check_berndt_dieter({3, 5});
  IdentityReport cz = check_carlitz(3, 5);
  CHECK(*bd.rhs_poly == *cz.rhs_poly);
  CHECK(*bd.lhs_poly == *cz.lhs_poly);
}

TEST_CASE("check_dedekind worked value") {
  IdentityReport r = check_dedekind(5, 7);
  require_holds_rat(r);
  // s(5,7) + s(7,5) = -1/14 + 0; rhs = -1/4 + 75/(12*35) = -1/14
  CHECK(*r.lhs_rat == dedekind_direct(5, 7) + dedekind_direct(7, 5));
  CHECK(*r.rhs_rat == BigRat(-1, 14));
  CHECK_THROWS_AS(check_dedekind(2, 4), std::domain_error);
}

TEST_CASE("check_two_ray holds across orientations and shears") {
  const std::vector<std::array<long, 4>> rays{
      {1, 1, 1, 2}, {1, 1, 1, 3}, {2, 1, 1, 1}, {3, 4, 2, 5},
      {1, 2, 1, 5}, {5, 3, 3, 2}, {2, 3, 1, 2}, {7, 4, 3, 2}};
  for (const auto& r : rays) {
    IdentityReport rep = check_two_ray(r[0], r[1], r[2], r[3]);
    REQUIRE(rep.holds);
    REQUIRE(rep.diff_poly->is_zero());
  }
  CHECK(check_two_ray(1, 1, 1, 2).identity == "two_ray_transform");
  CHECK_THROWS_AS(check_two_ray(1, 2, 2, 4), std::domain_error);     // non-primitive
  CHECK_THROWS_AS(check_two_ray(1, 5, 1, 2), orientation_error);     // det < 0
  CHECK_THROWS_AS(check_two_ray(2, 3, 2, 3), orientation_error);     // det = 0
}

TEST_CASE("check_unimodular_cor holds exactly on determinant-one quadruples") {
  long found = 0;
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c)
        for (long d = 1; d <= 6; ++d) {
          if (a * d - b * c != 1) continue;
          ++found;
          require_holds_poly(check_unimodular_cor(a, b, c, d));
        }
  CHECK(found > 20);
  CHECK_THROWS_AS(check_unimodular_cor(2, 2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(check_unimodular_cor(3, 4, 2, 5), std::domain_error);  // det 7
}

TEST_CASE("check_pommersheim_3term holds and is Bezout-shift invariant") {
  const std::vector<std::array<long, 4>> quads{
      {3, 4, 2, 5}, {1, 1, 1, 1}, {2, 3, 3, 4}, {5, 7, 2, 9}, {1, 6, 5, 4}};
  for (const auto& q : quads) {
    IdentityReport rep = check_pommersheim_3term(q[0], q[1], q[2], q[3]);
    REQUIRE(rep.holds);
    // the three-term sum s(cx - dy, ad + bc) only depends on the residue of
    // cx - dy modulo ad + bc, so any Bezout pair gives the same value
    Bezout bz = egcd(q[0], q[1]);
    BigInt e = BigInt(q[0]) * q[3] + BigInt(q[1]) * q[2];
    BigRat base = dedekind_direct(BigInt(q[2]) * bz.x - BigInt(q[3]) * bz.y, e);
    for (long t = -2; t <= 2; ++t) {
      BigInt x = bz.x + t * q[1], y = bz.y - t * q[0];
      REQUIRE(dedekind_direct(BigInt(q[2]) * x - BigInt(q[3]) * y, e) == base);
    }
  }
  CHECK_THROWS_AS(check_pommersheim_3term(2, 4, 1, 1), std::domain_error);
}

TEST_CASE("check_rademacher_3term worked value and grid") {
  IdentityReport r = check_rademacher_3term(1, 2, 3);
  require_holds_rat(r);
  CHECK(*r.rhs_rat == BigRat(-1, 18));

  for (long a = 1; a <= 9; ++a)
    for (long b = a; b <= 9; ++b)
      for (long c = b; c <= 9; ++c) {
        if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) continue;
        require_holds_rat(check_rademacher_3term(a, b, c));
      }
  CHECK_THROWS_AS(check_rademacher_3term(2, 4, 3), std::domain_error);
  CHECK_THROWS_AS(check_rademacher_3term(0, 1, 1), std::domain_error);
}

TEST_CASE("check_rademacher_abcd holds on determinant-one quadruples") {
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c)
        for (long d = 1; d <= 6; ++d) {
          if (a * d - b * c != 1) continue;
          require_holds_rat(check_rademacher_abcd(a, b, c, d));
        }
  CHECK_THROWS_AS(check_rademacher_abcd(1, 2, 3, 4), std::domain_error);
}

TEST_CASE("quadrant decomposition in two variables") {
  for (long a = 1; a <= 10; ++a)
    for (long b = 1; b <= 10; ++b) {
      if (gcd(a, b) != 1) continue;
      IdentityReport rep = check_quadrant_decomposition(BigInt(a), BigInt(b));
      REQUIRE(rep.holds);
    }
  CHECK(check_quadrant_decomposition(BigInt(2), BigInt(3)).identity ==
        "quadrant_decomposition");
}

TEST_CASE("orthant decomposition in three and four variables") {
  const std::vector<std::vector<BigInt>> tuples{
      {2, 3, 5}, {1, 1, 1}, {4, 2, 3}, {2, 3, 5, 2}};
  for (const auto& a : tuples) {
    IdentityReport rep = check_quadrant_decomposition(a);
    REQUIRE(rep.holds);
    CHECK(rep.identity == "orthant_decomposition");
  }
  CHECK_THROWS_AS(check_quadrant_decomposition(std::vector<BigInt>{3}),
                  std::domain_error);
}

TEST_CASE("reports carry decimal parameter strings") {
  IdentityReport rep = check_rademacher_3term(3, 5, 7);
  REQUIRE(rep.params.size() == 3);
  CHECK(rep.params[0] == std::pair<std::string, std::string>{"a", "3"});
  CHECK(rep.params[1] == std::pair<std::string, std::string>{"b", "5"});
  CHECK(rep.params[2] == std::pair<std::string, std::string>{"c", "7"});
}
