#include <doctest.h>

#include <gdpoly/string_oracle.hpp>

using gdpoly::GDTable;
using gdpoly::Rational;
using gdpoly::StringSolution;
using gdpoly::TruncatedSeries;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("no active flows gives u = t0") {
  GDTable table;
  auto sol = solve_string(table, {}, 6, 2);
  TruncatedSeries want = TruncatedSeries::variable(0, {0}, 6, 2);
  CHECK(sol.u == want);
  CHECK(sol.iterations <= 2);
}

TEST_CASE("single linear flow is the geometric series") {
  GDTable table;
  // u = t0 + t1 u resolves to t0 (1 + t1 + t1^2 + ...)
  auto sol = solve_string(table, {1}, 6, 1);
  for (int k = 0; k <= 5; ++k) {
    CHECK(sol.u.coeff(0, {1, k}) == Rational(1));
    CHECK(sol.u.coeff(1, {1, k}) == Rational(0));
  }
  CHECK(sol.u.coeff(0, {0, 3}) == Rational(0));
}

TEST_CASE("genus slices match the closed forms on the (t0, t2) chart") {
  GDTable table;
  auto sol = solve_string(table, {2}, 6, 2);
  // genus 0: u = t0 + t0^2 t2 / 2 + t0^3 t2^2 / 2 + 5 t0^4 t2^3 / 8 + ...
  CHECK(sol.u.coeff(0, {1, 0}) == Rational(1));
  CHECK(sol.u.coeff(0, {2, 1}) == Rational(1, 2));
  CHECK(sol.u.coeff(0, {3, 2}) == Rational(1, 2));
  // genus 1: (1/12) t2^2 (1 - 2 t0 t2)^{-2}
  CHECK(sol.u.coeff(1, {0, 2}) == Rational(1, 12));
  CHECK(sol.u.coeff(1, {1, 3}) == Rational(1, 3));
  CHECK(sol.u.coeff(1, {2, 4}) == Rational(1));
  // genus 2: (49/288) t2^5 (1 - 2 t0 t2)^{-9/2}
  CHECK(sol.u.coeff(2, {0, 5}) == Rational(49, 288));
}

TEST_CASE("landau-ginzburg equals the genus-zero slice") {
  GDTable table;
  std::vector<int> active{1, 2, 3};
  auto sol = solve_string(table, active, 6, 2);
  TruncatedSeries lg = gdpoly::landau_ginzburg_solve(active, 6);
  for (const auto& [k, c] : lg.coeffs()) {
    CHECK(sol.u.coeff(0, k.exp) == c);
  }
  for (const auto& [k, c] : sol.u.coeffs()) {
    if (k.genus == 0) CHECK(lg.coeff(0, k.exp) == c);
  }
}

TEST_CASE("solution is a fixed point of the truncated map") {
  GDTable table;
  auto sol = solve_string(table, {2, 3}, 5, 1);
  TruncatedSeries rhs =
      TruncatedSeries::variable(0, sol.u.var_ids(), 5, 1);
  for (int k : sol.active)
    rhs += TruncatedSeries::variable(k, sol.u.var_ids(), 5, 1) *
           substitute(table.R(k), sol.u);
  // the map only loses orders through the dispersive terms: genus g trusted
  // through 5 - 2g
  auto mism = sol.u.first_mismatch_within(rhs, 1, [](int g) { return 5 - 2 * g; });
  CHECK_FALSE(mism.has_value());
}

TEST_CASE("kdv flows hold within the trust bounds") {
  GDTable table;
  for (int D : {4, 6}) {
    for (int G : {0, 1, 2}) {
      auto sol = solve_string(table, {1, 2}, D, G);
      for (int n : {1, 2}) {
        auto check = check_kdv(table, sol, n);
        CAPTURE(D);
        CAPTURE(G);
        CAPTURE(n);
        CHECK_MESSAGE(check.pass, check.describe());
      }
    }
  }
}

TEST_CASE("kdv check rejects flows outside the chart") {
  GDTable table;
  auto sol = solve_string(table, {1}, 4, 0);
  CHECK_THROWS_AS(check_kdv(table, sol, 3), std::invalid_argument);
}

TEST_CASE("puncture equation with on-chart directions") {
  GDTable table;
  auto sol = solve_string(table, {1, 2}, 6, 2);
  auto check = check_puncture(table, sol);
  CHECK_MESSAGE(check.pass, check.describe());
}

TEST_CASE("puncture equation with off-chart directions") {
  GDTable table;
  // active {2}: the t1 direction is off the chart and runs through R_2
  auto sol = solve_string(table, {2}, 6, 2);
  auto check = check_puncture(table, sol);
  CHECK_MESSAGE(check.pass, check.describe());
}

TEST_CASE("free energy reconstruction") {
  GDTable table;
  auto sol = solve_string(table, {2}, 6, 2);
  auto fe = reconstruct_dF(table, sol);
  CHECK_MESSAGE(fe.derivative_identity.pass, fe.derivative_identity.describe());
  // genus-0 cubic term of dF/dt0 is t0^2/2, i.e. <tau_0^3> = 1
  CHECK(fe.dF_dt0.coeff(0, {2, 0}) == Rational(1, 2));
}

TEST_CASE("intersection numbers from the solution") {
  GDTable table;
  auto sol = solve_string(table, {2}, 6, 2);
  // <tau_0^3> = 1 from the linear coefficient
  CHECK(intersection_coefficient(sol, 0, {{0, 1}}) == Rational(1));
  // <tau_0^4 tau_2> = 1
  CHECK(intersection_coefficient(sol, 0, {{0, 2}, {2, 1}}) == Rational(1));
  // <tau_0^2 tau_2^2>_1 = 1/6
  CHECK(intersection_coefficient(sol, 1, {{2, 2}}) == Rational(1, 6));
  CHECK_THROWS_AS(intersection_coefficient(sol, 3, {{2, 2}}),
                  std::out_of_range);
  CHECK_THROWS_AS(intersection_coefficient(sol, 0, {{0, 9}}),
                  std::out_of_range);
}

TEST_CASE("full check matrix stays green") {
  GDTable table;
  for (int D : {4, 6}) {
    for (int G : {0, 1, 2}) {
      auto sol = solve_string(table, {2}, D, G);
      auto kdv = check_kdv(table, sol, 2);
      auto punct = check_puncture(table, sol);
      auto fe = reconstruct_dF(table, sol);
      CAPTURE(D);
      CAPTURE(G);
      CHECK_MESSAGE(kdv.pass, kdv.describe());
      CHECK_MESSAGE(punct.pass, punct.describe());
      CHECK_MESSAGE(fe.derivative_identity.pass,
                    fe.derivative_identity.describe());
    }
  }
}

TEST_SUITE_END();
