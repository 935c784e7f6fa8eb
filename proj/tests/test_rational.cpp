#include <doctest.h>

#include "stratkit/rational.hpp"

using stratkit::Rational;

TEST_CASE("rationals are kept canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.pow(3) == Rational(1, 27));
  CHECK(a.pow(0) == Rational(1));
  CHECK(Rational(-2, 3).inv() == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1, 0), stratkit::DomainError);
  CHECK_THROWS_AS(a / Rational(0), stratkit::DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("x"), stratkit::DomainError);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}
