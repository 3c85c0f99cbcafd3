#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rigami/scalar.hpp"

using namespace rigami;

TEST_CASE("rational parsing and canonical form") {
  Rational q = Rational::from_string("6/4");
  CHECK(q.num() == 3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "3/2");
  CHECK(Rational::from_string("-10/5").str() == "-2");
  CHECK(Rational::from_string("7").str() == "7");
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
  CHECK_THROWS_AS(Rational::from_string(""), Error);
}

TEST_CASE("rational grid rounding rounds half toward +inf") {
  BigInt G(4);
  CHECK(Rational(1, 8).round_to_grid(G) == Rational(1, 4));   // tie rounds up
  CHECK(Rational(-1, 8).round_to_grid(G) == Rational(0));     // tie rounds up
  CHECK(Rational(3, 16).round_to_grid(G) == Rational(1, 4));
  CHECK(Rational(1, 16).round_to_grid(G) == Rational(0));
}

TEST_CASE("rational square detection and ceil_sqrt") {
  CHECK(Rational(9, 4).is_perfect_square());
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).is_perfect_square());
  CHECK(Rational::ceil_sqrt(Rational(2)) == 2);
  CHECK(Rational::ceil_sqrt(Rational(4)) == 2);
  CHECK(Rational::ceil_sqrt(Rational(17, 4)) == 3);
  CHECK(Rational::ceil_sqrt(Rational(0)) == 0);
}

TEST_CASE("interval arithmetic encloses and refines monotonically") {
  auto two_128 = Interval::from_rational(Rational(2), 128);
  auto two_256 = Interval::from_rational(Rational(2), 256);
  auto s128 = two_128.sqrt();
  auto s256 = two_256.sqrt();
  auto sq128 = s128 * s128;
  auto sq256 = s256 * s256;
  CHECK(sq128.contains(Rational(2)));
  CHECK(sq256.contains(Rational(2)));
  CHECK(sq256.lo_rational() >= sq128.lo_rational());
  CHECK(sq256.hi_rational() <= sq128.hi_rational());

  auto cmp = s128.less_than(Rational(3, 2));
  REQUIRE(cmp.has_value());
  CHECK(*cmp);
}

TEST_CASE("interval division rejects zero-straddling divisor") {
  auto a = Interval::from_rational(Rational(1), 64);
  CHECK_THROWS_AS(a / Interval::from_rational(Rational(0), 64), Error);
  // a genuine straddler: sqrt(2)-sqrt(2) spans zero with tiny width
  auto s = Interval::from_rational(Rational(2), 64).sqrt();
  auto straddle = s - s;
  CHECK(straddle.contains(Rational(0)));
  CHECK_THROWS_AS(a / straddle, Error);
}

TEST_CASE("scalar stays exact on rational paths, interval only on radicals") {
  Scalar a = Rational(3, 4);
  Scalar b = Rational(1, 4);
  Scalar c = (a + b) * Scalar(Rational(2));
  REQUIRE(c.is_exact());
  CHECK(c.rat() == Rational(2));
  CHECK_FALSE(Scalar(Rational(2)).sqrt().is_exact());
  CHECK(Scalar(Rational(9, 4)).sqrt().is_exact());
  CHECK(Scalar(Rational(9, 4)).sqrt().rat() == Rational(3, 2));
}

TEST_CASE("scalar tri-state comparisons") {
  Scalar root2 = Scalar(Rational(2)).sqrt();
  auto lt = root2.lt(Scalar(Rational(3, 2)));
  REQUIRE(lt.has_value());
  CHECK(*lt);
  auto inside = root2.in_closed(Rational(7, 5), Rational(3, 2));
  REQUIRE(inside.has_value());
  CHECK(*inside);
  auto outside = root2.in_closed(Rational(0), Rational(1));
  REQUIRE(outside.has_value());
  CHECK_FALSE(*outside);
}

TEST_CASE("pi interval is tight") {
  Scalar::PrecisionGuard g(128);
  Scalar pi = Scalar::pi();
  auto in = pi.in_closed(Rational(314159, 100000), Rational(314160, 100000));
  REQUIRE(in.has_value());
  CHECK(*in);
}
