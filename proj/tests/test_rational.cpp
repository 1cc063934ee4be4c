#include <doctest.h>

#include "frobnil/rational.hpp"

using namespace frobnil;

TEST_SUITE("rational") {
  TEST_CASE("arithmetic is exact and canonical") {
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) * Rational(3)) == Rational(1));
    CHECK((Rational(7) / Rational(7)).is_one());
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(1, 2).den() == 2);
    CHECK(Rational(-1, 2).num() == -1);
  }

  TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    try {
      Rational r = Rational(3) / Rational(0);
      (void)r;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }

  TEST_CASE("string round trips") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational::from_string(Rational(-13, 9).str()) == Rational(-13, 9));
    CHECK_THROWS_AS(Rational::from_string("nope"), Error);
  }

  TEST_CASE("no overflow on long products") {
    Rational r(1);
    for (int i = 1; i <= 25; ++i) r *= Rational(i);
    Rational s(1);
    for (int i = 25; i >= 1; --i) s *= Rational(1, i);
    CHECK((r * s).is_one());
  }
}
