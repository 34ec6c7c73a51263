#pragma once

#include "gdpoly/diffpoly.hpp"
#include "gdpoly/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gdpoly {

struct SeriesKey {
    int genus = 0;
    std::vector<int> exp;  // aligned with the owning series' variable list
    auto operator<=>(const SeriesKey&) const = default;
};

struct SeriesMismatch {
    SeriesKey key;
    Rational got;
    Rational want;
    std::string describe(const std::vector<int>& var_ids) const;
};

// Sparse multivariate formal power series in t_{v} for v in a fixed variable
// list, with coefficients graded by genus. max_degree and max_genus are
// storage bounds: arithmetic drops anything beyond them. How far the stored
// coefficients can be trusted is the caller's bookkeeping (derivatives and
// genus-weighted substitution lose orders; see string_oracle).
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<int> var_ids, int max_degree, int max_genus);

    static TruncatedSeries constant(const Rational& c, std::vector<int> var_ids,
                                    int max_degree, int max_genus);
    static TruncatedSeries variable(int var_id, std::vector<int> var_ids,
                                    int max_degree, int max_genus);

    const std::vector<int>& var_ids() const { return var_ids_; }
    int max_degree() const { return max_degree_; }
    int max_genus() const { return max_genus_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }
    const std::map<SeriesKey, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int genus, const std::vector<int>& exp) const;
    // Coefficient addressed by variable id rather than position.
    Rational coeff_at(int genus, const std::map<int, int>& exp_by_var) const;
    void add_coeff(int genus, const std::vector<int>& exp, const Rational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& p);

    bool operator==(const TruncatedSeries&) const = default;

    // d/dt_{var_id}; the result's trusted degree is one lower than the input's.
    TruncatedSeries derivative(int var_id) const;
    // Multiply by lambda^{2*shift}; slices pushed past max_genus are dropped.
    TruncatedSeries genus_shift(int shift) const;
    TruncatedSeries truncated(int max_degree, int max_genus) const;

    // Coefficient-wise comparison through total degree bound(genus); bound may
    // differ per genus. Returns the first mismatch in key order, if any.
    std::optional<SeriesMismatch> first_mismatch_within(
        const TruncatedSeries& o, int max_genus,
        const std::function<int(int)>& degree_bound) const;

    std::string to_text() const;
    std::string to_json() const;
    static TruncatedSeries parse_json(std::string_view s);

private:
    int var_pos(int var_id) const;
    std::vector<int> var_ids_;  // ascending
    int max_degree_;
    int max_genus_;
    std::map<SeriesKey, Rational> coeffs_;  // canonical: no zero values
};

// Evaluates p on the series u: u_k becomes the k-th t_0-derivative of u and
// lambda^{2g} a genus shift by g. Output slices beyond u's max_genus are
// dropped; *genus_overflow (when given) reports whether that happened.
// Trusted degree of the genus-g output slice: u's trusted degree minus 2g.
TruncatedSeries substitute(const DiffPoly& p, const TruncatedSeries& u,
                           bool* genus_overflow = nullptr);

int total_degree(const std::vector<int>& exp);

}  // namespace gdpoly
