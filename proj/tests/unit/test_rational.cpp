#include <doctest.h>

#include <random>

#include "cyclebound/errors.hpp"
#include "cyclebound/rational.hpp"

using cyclebound::ParseError;
using cyclebound::Rational;

TEST_CASE("construction normalizes") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(3, 1) == Rational(3));
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("2.") == Rational(2));
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("zebra"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("3 / 2"), ParseError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("ordering and signs") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7, 2) >= Rational(7, 2));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 9).is_positive());
  CHECK(Rational(-1, 9).is_negative());
  CHECK(Rational(5, 4).to_double() == doctest::Approx(1.25));
}

TEST_CASE("equal values have identical representations") {
  Rational a = Rational(1, 3) + Rational(1, 6);  // 1/2 via arithmetic
  Rational b(2, 4);                              // 1/2 via normalization
  CHECK(a == b);
  CHECK(a.str() == b.str());
}

// Randomized associativity/commutativity: the laws must hold exactly, not up
// to rounding.
TEST_CASE("field laws on random triples") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  for (int i = 0; i < 100; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    Rational c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
