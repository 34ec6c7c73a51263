#include <doctest.h>

#include <gdpoly/gd_table.hpp>

using gdpoly::DiffPoly;
using gdpoly::GDTable;
using gdpoly::LenardForm;
using gdpoly::Rational;

namespace {

DiffPoly P(const char* s) { return DiffPoly::parse_text(s); }

}  // namespace

TEST_SUITE_BEGIN("gd_table");

TEST_CASE("base cases") {
  GDTable table;
  CHECK(table.max_n() == 0);
  CHECK(table.R(0) == DiffPoly::constant(Rational(1)));
  CHECK(table.T(0) == DiffPoly::u(0));
}

TEST_CASE("published low-order entries") {
  GDTable table;
  CHECK(table.R(1) == P("u0"));
  CHECK(table.R(2) == P("1/2*u0^2 + 1/12*L^2*u2"));
  CHECK(table.R(3) ==
        P("1/6*u0^3 + 1/12*L^2*u0*u2 + 1/24*L^2*u1^2 + 1/240*L^4*u4"));
  CHECK(table.T(1) == P("1/2*u0^2"));
  CHECK(table.T(2) == P("1/6*u0^3 + 1/24*L^2*u1^2"));
  CHECK(table.T(3) == P("1/24*u0^4 + 1/24*L^2*u0*u1^2 - 1/480*L^4*u2^2 "
                        "+ 1/240*L^4*u1*u3"));
  CHECK(table.T(4) ==
        P("1/120*u0^5 + 1/48*L^2*u0^2*u1^2 + 1/240*L^4*u1^2*u2 "
          "- 1/480*L^4*u0*u2^2 + 1/240*L^4*u0*u1*u3 + 1/13440*L^6*u3^2 "
          "- 1/6720*L^6*u2*u4 + 1/6720*L^6*u1*u5"));
}

TEST_CASE("canonical printing of table entries") {
  GDTable table;
  CHECK(table.R(2).to_text() == "1/2*u0^2 + 1/12*L^2*u2");
  CHECK(table.R(3).to_text() ==
        "1/6*u0^3 + 1/12*L^2*u0*u2 + 1/24*L^2*u1^2 + 1/240*L^4*u4");
  CHECK(table.T(2).to_text() == "1/6*u0^3 + 1/24*L^2*u1^2");
}

TEST_CASE("dx of R_2 matches the recursion display") {
  GDTable table;
  CHECK(dx(table.R(2)) == P("u0*u1 + 1/12*L^2*u3"));
}

TEST_CASE("all Lenard forms agree") {
  GDTable table;
  table.extend(6);
  for (int n = 0; n < 6; ++n) {
    DiffPoly primary = lenard_step(table.R(n), n, LenardForm::Primary);
    CHECK(primary == lenard_step(table.R(n), n, LenardForm::IntegrateUdR));
    CHECK(primary == lenard_step(table.R(n), n, LenardForm::IntegrateU1R));
    CHECK(primary == table.R(n + 1));
  }
}

TEST_CASE("P_{k,l} examples") {
  GDTable table;
  auto p01 = compute_pkl(table, 0, 1);
  CHECK(p01.P == DiffPoly::u(0));
  auto p11 = compute_pkl(table, 1, 1);
  CHECK(p11.P == P("1/2*u0^2"));
  // R_2 dx(R_1) = u1 R_2, i.e. P_{2,1} = T_2
  auto p21 = compute_pkl(table, 2, 1);
  CHECK(p21.P == table.T(2));
  // dx inverts on an off-diagonal pair as well
  auto p23 = compute_pkl(table, 2, 3);
  CHECK(dx(p23.P) == table.R(2) * dx(table.R(3)));
  CHECK_FALSE(p23.P.has_constant_term());
}

TEST_CASE("identity families through n = 8") {
  GDTable table;
  auto report = verify_identities(table, 8);
  for (const auto& c : report.checks) {
    CAPTURE(c.family);
    CAPTURE(c.n);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  CHECK(report.checks.size() == 5 * 9);
  CHECK(report.summary() == "45 checks, 0 failed");
}

TEST_CASE("genus-zero part of T_n is the dispersionless power") {
  GDTable table;
  for (int n = 0; n <= 6; ++n) {
    DiffPoly want = DiffPoly::monomial(
        gdpoly::Rational(mpz_class(1), gdpoly::factorial(n + 1)), 0,
        {{0, n + 1}});
    CHECK(table.T(n).genus_part(0) == want);
  }
}

TEST_CASE("json round trip") {
  GDTable table;
  table.extend(5);
  std::string js = table.to_json();
  GDTable back = GDTable::from_json(js);
  CHECK(back.max_n() == 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(back.R(n) == table.R(n));
    CHECK(back.T(n) == table.T(n));
  }
  // serialization is stable
  CHECK(back.to_json() == js);
}

TEST_CASE("json rejects tampering") {
  GDTable table;
  table.extend(2);
  std::string js = table.to_json();
  CHECK_THROWS(GDTable::from_json("{\"schema_version\": 999}"));
  CHECK_THROWS(GDTable::from_json("not json"));
  // flip the kind
  auto pos = js.find("gd_table");
  js.replace(pos, 8, "gd_fable");
  CHECK_THROWS(GDTable::from_json(js));
}

TEST_CASE("latex table mentions the dispersive terms") {
  GDTable table;
  std::string tex = latex_table(table, 2);
  CHECK(tex.find("R_0 &= 1") != std::string::npos);
  CHECK(tex.find("\\frac{1}{12} u_{2x} \\lambda^2") != std::string::npos);
  CHECK(tex.find("T_2 &=") != std::string::npos);
}

TEST_SUITE_END();
