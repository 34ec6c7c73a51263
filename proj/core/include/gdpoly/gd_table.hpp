#pragma once

#include "gdpoly/diffpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gdpoly {

// The three equivalent ways to run one Lenard step; Primary integrates the
// whole right-hand side, the other two peel off the terms that are already
// exact and integrate only the remainder.
enum class LenardForm { Primary, IntegrateUdR, IntegrateU1R };

// Cached sequence of (R_n, T_n). R_0 = 1, T_0 = u; every R_n and T_n with
// n >= 1 is normalized to zero constant term.
class GDTable {
public:
    static constexpr int kSchemaVersion = 1;
    static constexpr std::string_view kNormalization =
        "zero constant term, R_0 = 1";

    GDTable();

    int max_n() const { return static_cast<int>(r_.size()) - 1; }
    void extend(int n);

    const DiffPoly& R(int n);
    const DiffPoly& T(int n);

    std::string to_json() const;
    static GDTable from_json(std::string_view s);

private:
    std::vector<DiffPoly> r_;
    std::vector<DiffPoly> t_;
};

// One step of the Lenard recursion: R_{n+1} from R_n.
DiffPoly lenard_step(const DiffPoly& rn, int n,
                     LenardForm form = LenardForm::Primary);

struct PklEntry {
    int k = 0;
    int l = 0;
    DiffPoly P;
};

// P with dx(P) = R_k * dx(R_l), zero constant term.
PklEntry compute_pkl(GDTable& table, int k, int l);

struct IdentityCheck {
    std::string family;  // one of "a".."e"
    int n = 0;
    bool pass = false;
    std::string detail;  // empty on pass
};

struct VerifyReport {
    int max_n = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
    std::string summary() const;
};

// Exact checks, for every n <= max_n:
//   (a) var_delta(R_{n+1}) = R_n
//   (b) var_delta(u * R_n) = (n+1) R_n - half_lambda_derivative(R_n)
//   (c) var_delta(T_n) = euler_lambda(R_n)
//   (d) every occupied slot of R_n has degree n - g and weight 2g
//   (e) genus-0 part of R_n is u^n / n!
VerifyReport verify_identities(GDTable& table, int max_n);

// LaTeX lines for R_0..R_n and T_0..T_n in the u_{kx} notation.
std::string latex_table(GDTable& table, int max_n);

}  // namespace gdpoly
