#include <doctest.h>

#include <gdpoly/rational.hpp>

#include <stdexcept>

using gdpoly::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction and canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).str() == "5");
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  a += b;
  CHECK(a.str() == "5/6");
}

TEST_CASE("predicates") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1).is_one());
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(-3, 5).sign() == -1);
  CHECK(Rational(3, 5).sign() == 1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("pow and inverse") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5, 7).inverse() == Rational(7, 5));
  CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(gdpoly::factorial(0) == 1);
  CHECK(gdpoly::factorial(5) == 120);
  CHECK(gdpoly::binomial(Rational(5), 2) == Rational(10));
  // generalized binomial with half-integer argument
  CHECK(gdpoly::binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gdpoly::binomial(Rational(-9, 2), 1) == Rational(-9, 2));
  CHECK(gdpoly::binomial(Rational(-9, 2), 0) == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_SUITE_END();
