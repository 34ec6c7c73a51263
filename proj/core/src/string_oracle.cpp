#include "gdpoly/string_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace gdpoly {

namespace {

std::vector<int> chart_vars(const std::vector<int>& active) {
    std::vector<int> vars{0};
    for (int k : active) {
        if (k < 1) throw std::invalid_argument("active flow indices start at 1");
        vars.push_back(k);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool has_var(const std::vector<int>& vars, int v) {
    return std::binary_search(vars.begin(), vars.end(), v);
}

SeriesCheck make_check(std::string name, const TruncatedSeries& got,
                       const TruncatedSeries& want, int max_genus,
                       const std::function<int(int)>& bound) {
    SeriesCheck c;
    c.name = std::move(name);
    c.var_ids = got.var_ids();
    c.mismatch = got.first_mismatch_within(want, max_genus, bound);
    c.pass = !c.mismatch.has_value();
    return c;
}

}  // namespace

std::string SeriesCheck::describe() const {
    if (pass) return name + ": pass";
    return name + ": FAIL, " + mismatch->describe(var_ids);
}

StringSolution solve_string(GDTable& table, const std::vector<int>& active,
                            int degree, int genus) {
    if (degree < 0 || genus < 0)
        throw std::invalid_argument("negative truncation bound");
    const std::vector<int> vars = chart_vars(active);
    const int work_degree = degree + 2 * genus;
    // Every pass extends the exact region by at least one total degree; the
    // genus-g ceiling work_degree - 2g is reached after at most work_degree
    // passes. The margin is cheap insurance, and the loop exits early anyway
    // once the truncated map is literally stationary.
    const int max_passes = work_degree + 2 * genus + 4;

    TruncatedSeries u =
        TruncatedSeries::variable(0, vars, work_degree, genus);
    const TruncatedSeries t0 = u;
    int iterations = max_passes;
    for (int pass = 1; pass <= max_passes; ++pass) {
        TruncatedSeries next = t0;
        for (int k : vars) {
            if (k == 0) continue;
            next += TruncatedSeries::variable(k, vars, work_degree, genus) *
                    substitute(table.R(k), u);
        }
        if (next == u) {
            iterations = pass;
            break;
        }
        u = std::move(next);
    }
    StringSolution sol{u.truncated(degree, genus), {}, degree, genus,
                       iterations};
    for (int v : vars)
        if (v != 0) sol.active.push_back(v);
    return sol;
}

SeriesCheck check_kdv(GDTable& table, const StringSolution& sol, int n) {
    if (n < 0) throw std::invalid_argument("negative flow index");
    if (n != 0 && !has_var(sol.u.var_ids(), n))
        throw std::invalid_argument("t" + std::to_string(n) +
                                    " is not a variable of the solution");
    const TruncatedSeries lhs = sol.u.derivative(n);
    const TruncatedSeries rhs = substitute(table.R(n + 1), sol.u).derivative(0);
    const int D = sol.degree;
    return make_check("kdv flow n=" + std::to_string(n), lhs, rhs, sol.genus,
                      [D](int g) { return D - 2 * g - 1; });
}

SeriesCheck check_puncture(GDTable& table, const StringSolution& sol) {
    const auto& vars = sol.u.var_ids();
    TruncatedSeries rhs = TruncatedSeries::constant(
        Rational(1), vars, sol.u.max_degree(), sol.u.max_genus());
    bool off_chart = false;
    for (int k : sol.active) {
        TruncatedSeries dir(vars, sol.u.max_degree(), sol.u.max_genus());
        if (has_var(vars, k - 1)) {
            dir = sol.u.derivative(k - 1);
        } else {
            off_chart = true;
            dir = substitute(table.R(k), sol.u).derivative(0);
        }
        rhs += TruncatedSeries::variable(k, vars, sol.u.max_degree(),
                                         sol.u.max_genus()) *
               dir;
    }
    const TruncatedSeries lhs = sol.u.derivative(0);
    const int D = sol.degree;
    // A direct du/dt_{k-1} is exact through D - 1 and the KdV-substituted
    // directions through D - 2g - 1; the t_k factor buys one degree back.
    const auto bound = [D, off_chart](int g) {
        return off_chart && g > 0 ? D - 2 * g : D - 1;
    };
    return make_check("puncture", lhs, rhs, sol.genus, bound);
}

FreeEnergyPart reconstruct_dF(GDTable& table, const StringSolution& sol) {
    const auto& vars = sol.u.var_ids();
    const int D = sol.u.max_degree();
    const int G = sol.u.max_genus();
    TruncatedSeries dF(vars, D, G);
    for (int n : vars)
        dF += TruncatedSeries::variable(n, vars, D, G) *
              substitute(table.T(n), sol.u);
    dF -= substitute(table.T(1), sol.u);

    const int claimed = sol.degree;
    SeriesCheck check =
        make_check("dF/dt0 derivative identity", dF.derivative(0), sol.u,
                   sol.genus, [claimed](int g) {
                       return g == 0 ? claimed - 1 : claimed - 2 * g;
                   });
    return FreeEnergyPart{std::move(dF), std::move(check)};
}

TruncatedSeries landau_ginzburg_solve(const std::vector<int>& active,
                                      int degree) {
    const std::vector<int> vars = chart_vars(active);
    TruncatedSeries u = TruncatedSeries::variable(0, vars, degree, 0);
    const TruncatedSeries t0 = u;
    for (int pass = 1; pass <= degree + 2; ++pass) {
        TruncatedSeries next = t0;
        for (int k : vars) {
            if (k == 0) continue;
            TruncatedSeries pk = TruncatedSeries::constant(
                Rational(mpz_class(1), factorial(k)), vars, degree, 0);
            for (int i = 0; i < k; ++i) pk = pk * u;
            next += TruncatedSeries::variable(k, vars, degree, 0) * pk;
        }
        if (next == u) break;
        u = std::move(next);
    }
    return u;
}

Rational intersection_coefficient(const StringSolution& sol, int g,
                                  const std::map<int, int>& alpha) {
    if (g < 0 || g > sol.genus)
        throw std::out_of_range("genus outside the solution's truncation");
    int total = 0;
    Rational scale(1);
    for (const auto& [v, e] : alpha) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        total += e;
        scale *= factorial(e);
    }
    if (total > sol.degree)
        throw std::out_of_range("exponent vector outside the truncation");
    return scale * sol.u.coeff_at(g, alpha);
}

}  // namespace gdpoly
