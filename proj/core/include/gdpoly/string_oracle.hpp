#pragma once

#include "gdpoly/gd_table.hpp"
#include "gdpoly/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gdpoly {

struct StringSolution {
    TruncatedSeries u;
    std::vector<int> active;  // flow indices k >= 1 with t_k switched on
    int degree = 0;           // claimed trusted total degree, every genus
    int genus = 0;
    int iterations = 0;  // passes until the truncated map was stationary
};

struct SeriesCheck {
    std::string name;
    bool pass = false;
    std::optional<SeriesMismatch> mismatch;
    std::vector<int> var_ids;  // for rendering the mismatch
    std::string describe() const;
};

// Fixed point of u <- t_0 + sum_{k active} t_k R_k[u]. Internally iterates at
// working degree D + 2G so that every genus slice of the returned series is
// exact through total degree D.
StringSolution solve_string(GDTable& table, const std::vector<int>& active,
                            int degree, int genus);

// du/dt_n = d/dt_0 R_{n+1}[u], compared per genus g through degree D - 2g - 1.
SeriesCheck check_kdv(GDTable& table, const StringSolution& sol, int n);

// du/dt_0 = 1 + sum_{k active} t_k du/dt_{k-1}. Directions t_{k-1} outside
// the solution's chart are taken through the KdV flow d/dt_0 R_k[u].
SeriesCheck check_puncture(GDTable& table, const StringSolution& sol);

struct FreeEnergyPart {
    TruncatedSeries dF_dt0;  // lambda^2 dF/dt_0 up to a t_0-independent datum
    SeriesCheck derivative_identity;  // d(dF_dt0)/dt_0 = u
};

FreeEnergyPart reconstruct_dF(GDTable& table, const StringSolution& sol);

// Genus-zero fixed point of u <- t_0 + sum t_k u^k / k!; equals the genus-0
// slice of solve_string.
TruncatedSeries landau_ginzburg_solve(const std::vector<int>& active,
                                      int degree);

// The correlator <tau_0^2 prod_a tau_a^{alpha_a}>_g read off u's coefficient
// of t^alpha at genus g, times prod alpha_a!.
Rational intersection_coefficient(const StringSolution& sol, int g,
                                  const std::map<int, int>& alpha);

}  // namespace gdpoly
