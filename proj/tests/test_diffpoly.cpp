#include <doctest.h>

#include <gdpoly/diffpoly.hpp>

using gdpoly::DiffPoly;
using gdpoly::GradingTriple;
using gdpoly::JetExp;
using gdpoly::JetKey;
using gdpoly::NotATotalDerivative;
using gdpoly::Rational;

namespace {

DiffPoly u(int k) { return DiffPoly::u(k); }

DiffPoly mono(const Rational& c, int genus, JetExp jet) {
  return DiffPoly::monomial(c, genus, std::move(jet));
}

}  // namespace

TEST_SUITE_BEGIN("diffpoly");

TEST_CASE("ring basics") {
  DiffPoly p = u(0) * u(0);
  CHECK(p.to_text() == "u0^2");
  CHECK((p + p).to_text() == "2*u0^2");
  CHECK((p - p).is_zero());
  CHECK((Rational(1, 2) * p).to_text() == "1/2*u0^2");
  CHECK((u(0) * u(1)).to_text() == "u0*u1");
  CHECK(DiffPoly::constant(Rational(3)).to_text() == "3");
  CHECK(DiffPoly::zero().to_text() == "0");
}

TEST_CASE("term ordering in text output") {
  // genus ascending, then degree descending within a genus
  DiffPoly p = mono(Rational(1, 2), 0, {{0, 2}}) + mono(Rational(1, 12), 1, {{2, 1}});
  CHECK(p.to_text() == "1/2*u0^2 + 1/12*L^2*u2");
}

TEST_CASE("dx on generators") {
  CHECK(dx(u(0)) == u(1));
  CHECK(dx(u(3)) == u(4));
  CHECK(dx(DiffPoly::constant(Rational(5))).is_zero());
}

TEST_CASE("dx is a derivation") {
  DiffPoly p = Rational(1, 2) * (u(0) * u(0));
  CHECK(dx(p) == u(0) * u(1));
  DiffPoly q = u(0) * u(2);
  CHECK(dx(q) == u(1) * u(2) + u(0) * u(3));
  // Leibniz on a random-ish product
  DiffPoly a = u(1) * u(1) + Rational(2) * u(0);
  DiffPoly b = u(0) * u(2);
  CHECK(dx(a * b) == dx(a) * b + a * dx(b));
}

TEST_CASE("pd extracts partials") {
  DiffPoly p = Rational(1, 2) * (u(0) * u(0)) + u(0) * u(2);
  CHECK(pd(p, 0) == u(0) + u(2));
  CHECK(pd(p, 2) == u(0));
  CHECK(pd(p, 1).is_zero());
}

TEST_CASE("variational derivative") {
  // delta(u1^2) = -2 u2
  DiffPoly p = u(1) * u(1);
  CHECK(var_delta(p) == Rational(-2) * u(2));
  // delta of any dx image vanishes
  DiffPoly q = u(0) * u(0) * u(1) + u(2) * u(3);
  CHECK(var_delta(dx(q)).is_zero());
  // delta(u0^3/6) = u0^2/2
  DiffPoly cube = Rational(1, 6) * (u(0) * u(0) * u(0));
  CHECK(var_delta(cube) == Rational(1, 2) * (u(0) * u(0)));
}

TEST_CASE("antiderivative inverts dx") {
  DiffPoly p = u(0) * u(1);
  CHECK(antiderivative(p) == Rational(1, 2) * (u(0) * u(0)));
  DiffPoly q = u(1) * u(2);
  CHECK(antiderivative(q) == Rational(1, 2) * (u(1) * u(1)));
  // mixed-genus image round trip
  DiffPoly r = Rational(1, 2) * (u(0) * u(0)) + mono(Rational(1, 12), 1, {{2, 1}});
  CHECK(antiderivative(dx(r)) == r);
}

TEST_CASE("antiderivative rejects non-images") {
  CHECK_THROWS_AS(antiderivative(u(0) * u(0)), NotATotalDerivative);
  CHECK_THROWS_AS(antiderivative(DiffPoly::constant(Rational(1))),
                  NotATotalDerivative);
  try {
    antiderivative(u(1) * u(1));
    CHECK(false);
  } catch (const NotATotalDerivative& e) {
    CHECK(e.polynomial() == "u1^2");
  }
}

TEST_CASE("lambda operators") {
  DiffPoly p = u(0) + mono(Rational(1), 1, {{0, 1}}) + mono(Rational(1), 2, {{0, 1}});
  DiffPoly e = euler_lambda(p);
  CHECK(e.coeff(JetKey{0, {{0, 1}}}) == Rational(1));
  CHECK(e.coeff(JetKey{1, {{0, 1}}}) == Rational(-1));
  CHECK(e.coeff(JetKey{2, {{0, 1}}}) == Rational(-3));
  DiffPoly h = half_lambda_derivative(p);
  CHECK(h.coeff(JetKey{0, {{0, 1}}}) == Rational(0));
  CHECK(h.coeff(JetKey{1, {{0, 1}}}) == Rational(1));
  CHECK(h.coeff(JetKey{2, {{0, 1}}}) == Rational(2));
}

TEST_CASE("grading and slots") {
  DiffPoly p = mono(Rational(1, 12), 1, {{2, 1}});
  auto cells = grading(p);
  REQUIRE(cells.size() == 1);
  CHECK(*cells.begin() == GradingTriple{1, 1, 2});

  // dx shifts (d, w) to (d, w+1)
  auto shifted = grading(dx(p));
  REQUIRE(shifted.size() == 1);
  CHECK(*shifted.begin() == GradingTriple{1, 1, 3});

  CHECK(u(0).is_homogeneous(1));
  CHECK((u(0) * u(0)).is_homogeneous(2));
  CHECK_FALSE((u(0) + u(0) * u(0)).is_homogeneous(1));
}

TEST_CASE("slot_basis enumerates jet monomials") {
  // degree 2, weight 2: u1^2 and u0*u2
  auto b22 = gdpoly::slot_basis(2, 2);
  CHECK(b22.size() == 2);
  // degree 1, weight w: only u_w
  auto b13 = gdpoly::slot_basis(1, 3);
  REQUIRE(b13.size() == 1);
  CHECK(b13[0] == JetExp{{3, 1}});
  // degree 3, weight 0: u0^3
  auto b30 = gdpoly::slot_basis(3, 0);
  REQUIRE(b30.size() == 1);
  CHECK(b30[0] == JetExp{{0, 3}});
}

TEST_CASE("text round trip") {
  DiffPoly p = Rational(1, 6) * (u(0) * u(0) * u(0)) +
               mono(Rational(1, 12), 1, {{0, 1}, {2, 1}}) +
               mono(Rational(1, 24), 1, {{1, 2}}) +
               mono(Rational(1, 240), 2, {{4, 1}});
  std::string s = p.to_text();
  CHECK(s ==
        "1/6*u0^3 + 1/12*L^2*u0*u2 + 1/24*L^2*u1^2 + 1/240*L^4*u4");
  CHECK(DiffPoly::parse_text(s) == p);
  // negatives render with a binary minus
  DiffPoly m = u(0) - u(1);
  CHECK(m.to_text() == "u0 - u1");
  CHECK(DiffPoly::parse_text("u0 - u1") == m);
  CHECK(DiffPoly::parse_text("-u0") == -u(0));
  CHECK(DiffPoly::parse_text("0").is_zero());
}

TEST_CASE("text parser rejects junk") {
  CHECK_THROWS_AS(DiffPoly::parse_text("u0 +"), std::invalid_argument);
  CHECK_THROWS_AS(DiffPoly::parse_text("L^3*u0"), std::invalid_argument);
  CHECK_THROWS_AS(DiffPoly::parse_text("u0^"), std::invalid_argument);
  CHECK_THROWS_AS(DiffPoly::parse_text("2x"), std::invalid_argument);
}

TEST_CASE("json round trip") {
  DiffPoly p = Rational(1, 2) * (u(0) * u(0)) + mono(Rational(1, 12), 1, {{2, 1}});
  std::string js = p.to_json();
  CHECK(DiffPoly::parse_json(js) == p);
  // schema: terms array with coeff/genus/jet
  CHECK(js.find("\"terms\"") != std::string::npos);
  CHECK(js.find("\"coeff\"") != std::string::npos);
  CHECK(js.find("\"genus\"") != std::string::npos);
  CHECK(js.find("\"jet\"") != std::string::npos);
}

TEST_CASE("latex output") {
  DiffPoly p = Rational(1, 2) * (u(0) * u(0)) + mono(Rational(1, 12), 1, {{2, 1}});
  CHECK(p.to_latex() == "\\frac{1}{2} u^2 + \\frac{1}{12} u_{2x} \\lambda^2");
  CHECK(u(1).to_latex() == "u_x");
}

TEST_SUITE_END();
