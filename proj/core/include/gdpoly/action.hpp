#pragma once

#include "gdpoly/gd_table.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdpoly {

// The Lagrangian density sum_n (t_n - delta_{n1}) T_n with the t_n kept as
// formal scalars: one block per flow index.
struct ActionDensity {
    int max_n = 0;
    std::vector<std::pair<int, DiffPoly>> blocks;  // (n, T_n)

    // Substitute numeric values for the t_n (absent entries are zero).
    DiffPoly evaluate(const std::map<int, Rational>& t) const;
    // All t_n = 0: minus T_1.
    DiffPoly at_zero_times() const { return evaluate({}); }

    std::string to_text() const;
    std::string to_latex() const;
};

ActionDensity lagrangian_expansion(GDTable& table, int max_n);

struct EulerLagrangeCheck {
    int n = 0;
    int g = 0;
    bool pass = false;
    std::string detail;
};

// Per flow index n <= max_n and genus g <= max_g, asserts that the genus-g
// slice of var_delta(T_n) equals (1-2g) times the genus-g slice of R_n; with
// the t_n formal this is exactly the statement that the Euler-Lagrange
// expression of the action density vanishes iff the string equation holds,
// genus by genus.
std::vector<EulerLagrangeCheck> euler_lagrange_check(GDTable& table, int max_n,
                                                     int max_g);

}  // namespace gdpoly
