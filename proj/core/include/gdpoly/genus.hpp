#pragma once

#include "gdpoly/rational.hpp"
#include "gdpoly/series.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gdpoly {

// u_g = c_g t_2^{3g-1} (1 - 2 t_0 t_2)^{-(5g-1)/2} + [g=0] t_2^{-1}.
struct GenusClosedForm {
    int g = 0;
    Rational c_g;
    int t2_power = 0;     // 3g - 1 (negative only for g = 0)
    int s_power_num = 0;  // the numerator of -(5g-1)/2, over a fixed 2
    bool extra_t2_inverse = false;  // the delta_{g,0} t_2^{-1} term

    std::string to_text() const;
    std::string to_latex() const;
    // Expansion in (t_0, t_2) through total degree D, stored at genus g.
    // Negative t_2 powers cancel for every g >= 0.
    TruncatedSeries expand(int max_degree) const;
};

// c_0 = -1; c_g = 1/2 sum_{g1=1}^{g-1} c_{g1} c_{g-g1} + (5g-4)(5g-6)/12 c_{g-1}.
std::vector<Rational> c_sequence(int g_max);

GenusClosedForm closed_form_ug(int g);

// u_g by the recursive scheme: u_0 from its quadratic fixed point and then
// u_g = t_2/(1 - t_2 u_0) (1/2 sum_{g1=1}^{g-1} u_{g1} u_{g-g1}
//                          + 1/12 d^2 u_{g-1}/dt_0^2).
// Computed at internal working degree max_degree + 2g so the returned series
// (stored at genus g) is exact through max_degree; agrees with
// closed_form_ug(g).expand.
TruncatedSeries ug_by_recursion(int g, int max_degree);

// a_0 = -1/2; a_n = sum_{k=1}^{n-1} a_k a_{n-k} + 2(5n-4)(5n-6) a_{n-1}.
// All values with n >= 1 are positive integers.
class ASequence {
public:
    explicit ASequence(int n_max);

    int n_max() const { return static_cast<int>(values_.size()); }
    static Rational a0() { return Rational(-1, 2); }
    const mpz_class& a(int n) const;  // n in [1, n_max]
    Rational c(int g) const;          // 2 a_g / 24^g, defined for g >= 0
    void extend(int n_max);

private:
    std::vector<mpz_class> values_;  // values_[i] = a_{i+1}
};

// Float diagnostics from exact integers; logs only, so nothing overflows.
// r_n compares a_n against beta 50^{n-1} ((n-1)!)^2 and rho_n compares
// c_n^{1/n} against (25/(12 e^2)) n^2.
struct AsymptoticsReport {
    int n_max = 0;
    std::vector<double> r;    // index n, valid for n in [1, n_max]
    std::vector<double> rho;  // index n, valid for n in [1, n_max]
    double beta = 0.0;        // 5 sqrt(15) / (2 pi^2)
    double rho_target = 0.0;  // 25 / (12 e^2)

    double ratio_gap(int n) const;  // |r_{n+1}/r_n - 1|, needs n+1 <= n_max
    std::string csv() const;        // n,r_n,rho_n
};

AsymptoticsReport asymptotics(const ASequence& seq, int n_max);

class InsufficientDepth : public std::runtime_error {
public:
    InsufficientDepth(const std::string& what, int n_max)
        : std::runtime_error(what), n_max_(n_max) {}
    int n_max() const { return n_max_; }

private:
    int n_max_;
};

struct DivergenceVerdict {
    Rational radius;
    int witness_n = 0;  // an n with |c_n| radius^{2n} > 1, exactly certified
    std::string certificate;
};

// Exact big-integer certificate that the genus series in lambda diverges at
// |lambda| = radius, evaluated at (t_0, t_2) = (0, 1) where the genus-g term
// is c_g lambda^{2g}. Works through a termwise lower bound on a_n, so the
// search is linear time; the certified inequality itself is exact. Throws
// InsufficientDepth when no witness is found below n_max.
DivergenceVerdict divergence_certificate(const Rational& radius, int n_max);

// OEIS b-file lines "n a_n" for n in [1, n_max].
std::string bfile(const ASequence& seq, int n_max);

// Sum of the expanded closed forms lambda^{2g} u_g, g <= max_genus; the
// (t_0, t_2) chart's genus expansion for cross-checks against the oracle.
TruncatedSeries genus_expansion_series(int max_genus, int max_degree);

}  // namespace gdpoly
