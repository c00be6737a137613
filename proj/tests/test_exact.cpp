#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "carlitz/exact.hpp"

using namespace carlitz;

TEST_CASE("egcd worked examples") {
  Bezout r = egcd(3, 5);
  CHECK(r.g == 1);
  CHECK(r.x == 2);
  CHECK(r.y == -1);

  r = egcd(1, 1);
  CHECK(r.g == 1);
  CHECK(r.x == 1);
  CHECK(r.y == 0);

  r = egcd(-4, 6);
  CHECK(r.g == 2);
  CHECK(r.x == 1);
  CHECK(r.y == 1);
}

TEST_CASE("egcd rejects the all-zero input") {
  CHECK_THROWS_AS(egcd(0, 0), std::domain_error);
}

TEST_CASE("egcd exhaustive identity and gcd agreement") {
  for (long a = -200; a <= 200; ++a) {
    for (long b = -200; b <= 200; ++b) {
      if (a == 0 && b == 0) continue;
      Bezout r = egcd(a, b);
      REQUIRE(r.g > 0);
      REQUIRE(r.g == gcd(a, b));
      REQUIRE(BigInt(a) * r.x + BigInt(b) * r.y == r.g);
    }
  }
}

TEST_CASE("floor_div and floor_mod exhaustive") {
  for (long n = -200; n <= 200; ++n) {
    for (long d = 1; d <= 200; ++d) {
      BigInt q = floor_div(n, d);
      BigInt r = floor_mod(n, d);
      REQUIRE(q * d + r == n);
      REQUIRE(r >= 0);
      REQUIRE(r < d);
    }
  }
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK_THROWS_AS(floor_div(1, 0), std::domain_error);
  CHECK_THROWS_AS(floor_div(1, -3), std::domain_error);
}

TEST_CASE("frac stays in [0,1) and subtracts the floor") {
  CHECK(frac(BigRat(7, 2)) == BigRat(1, 2));
  CHECK(frac(BigRat(-7, 2)) == BigRat(1, 2));
  CHECK(frac(BigRat(-1, 3)) == BigRat(2, 3));
  CHECK(frac(BigRat(5)) == 0);
  for (long p = -60; p <= 60; ++p) {
    for (long q = 1; q <= 25; ++q) {
      BigRat f = frac(make_rat(p, q));
      REQUIRE(f >= 0);
      REQUIRE(f < 1);
      BigRat whole = make_rat(p, q) - f;
      REQUIRE(whole.get_den() == 1);
    }
  }
}

TEST_CASE("sawtooth: zero on integers, odd off them") {
  CHECK(sawtooth(BigRat(3)) == 0);
  CHECK(sawtooth(BigRat(0)) == 0);
  CHECK(sawtooth(BigRat(1, 3)) == BigRat(-1, 6));
  CHECK(sawtooth(BigRat(2, 3)) == BigRat(1, 6));
  for (long p = -60; p <= 60; ++p) {
    for (long q = 1; q <= 25; ++q) {
      BigRat x = make_rat(p, q);
      REQUIRE(sawtooth(x) + sawtooth(-x) == 0);  // odd (both vanish on integers)
      REQUIRE(sawtooth(x + 1) == sawtooth(x));   // periodic
    }
  }
}

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
  CHECK(to_string(make_rat(-2, 36)) == "-1/18");
  CHECK(to_string(make_rat(4, -2)) == "-2");
  CHECK(to_string(make_rat(0, 7)) == "0");
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("string round trips") {
  CHECK(to_string(BigInt(-18)) == "-18");
  CHECK(parse_bigint("-18") == -18);
  CHECK(parse_bigint("+7") == 7);
  CHECK(parse_bigint("123456789012345678901234567890") ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_bigint(""), std::domain_error);
  CHECK_THROWS_AS(parse_bigint("12x"), std::domain_error);
  CHECK_THROWS_AS(parse_bigint("--1"), std::domain_error);

  CHECK(to_string(parse_bigrat("-2/36")) == "-1/18");
  CHECK(to_string(parse_bigrat("3")) == "3");
  CHECK(to_string(parse_bigrat("3/1")) == "3");
  CHECK_THROWS_AS(parse_bigrat("1/0"), std::domain_error);
  CHECK_THROWS_AS(parse_bigrat("a/b"), std::domain_error);

  for (long p = -30; p <= 30; ++p)
    for (long q = 1; q <= 12; ++q) {
      BigRat x = make_rat(p, q);
      REQUIRE(parse_bigrat(to_string(x)) == x);
    }
}

TEST_CASE("bezout coefficients stay small") {
  // |x| <= max(1, |b|/(2g)) keeps downstream exponents small.
  for (long a = 1; a <= 120; ++a)
    for (long b = 1; b <= 120; ++b) {
      Bezout r = egcd(a, b);
      BigInt bound_x = BigInt(b) / (2 * r.g);
      if (bound_x < 1) bound_x = 1;
      REQUIRE(abs(r.x) <= bound_x);
      BigInt bound_y = BigInt(a) / (2 * r.g);
      if (bound_y < 1) bound_y = 1;
      REQUIRE(abs(r.y) <= bound_y);
    }
}
