#pragma once

#include "gdpoly/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdpoly {

// The graded algebra of differential polynomials: exact rational polynomials
// in the jet variables u0 = u, u1 = du/dx, u2, ... with an auxiliary grading
// by even powers of the dispersion parameter L (L^2g on each monomial; odd
// powers of L never occur and cannot be represented).

// Exponent list of one jet monomial, sorted by derivative order, exponents > 0.
using JetExp = std::vector<std::pair<int, int>>;

// (degree, weight) cell of the grading: degree = sum of exponents,
// weight = sum of order*exponent. d/dx maps (d, w) into (d, w+1).
struct GradedSlot {
    int degree = 0;
    int weight = 0;
    auto operator<=>(const GradedSlot&) const = default;
};

// A graded slot together with its genus (the g of L^2g).
struct GradingTriple {
    int genus = 0;
    int degree = 0;
    int weight = 0;
    auto operator<=>(const GradingTriple&) const = default;
};

struct JetKey {
    int genus = 0;  // exponent g in L^2g
    JetExp jet;     // sorted by order, no zero exponents

    int degree() const;
    int weight() const;
    bool is_constant() const { return jet.empty(); }

    bool operator==(const JetKey&) const = default;
};

// Canonical term order: genus ascending, then degree descending, then weight
// ascending, then lexicographic with u0 > u1 > u2 > ... (larger exponent on
// the smaller order first).
struct JetKeyLess {
    bool operator()(const JetKey& a, const JetKey& b) const;
};

// Raised when a formal antiderivative is requested for a polynomial that is
// not a d/dx-image; carries the offending polynomial in text form.
class NotATotalDerivative : public std::runtime_error {
public:
    NotATotalDerivative(const std::string& what, std::string poly_text)
        : std::runtime_error(what), poly_(std::move(poly_text)) {}
    const std::string& polynomial() const { return poly_; }

private:
    std::string poly_;
};

class DiffPoly {
public:
    using TermMap = std::map<JetKey, Rational, JetKeyLess>;

    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly constant(const Rational& c);
    static DiffPoly u(int order);  // the jet variable u_order
    static DiffPoly monomial(const Rational& c, int genus, JetExp jet);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of the given key (zero when absent).
    Rational coeff(const JetKey& key) const;
    // Sum of all jet-free monomials (constants, any genus); zero L-degree slice
    // of the kernel of d/dx is genus 0 only, but L^2g constants count too.
    bool has_constant_term() const;

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly operator-() const;
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const Rational& c, const DiffPoly& p);

    bool operator==(const DiffPoly&) const = default;

    // Genus-g slice, with the L^2g factor removed (result is genus 0).
    DiffPoly genus_part(int g) const;
    // Genus-g slice keeping the L^2g factor.
    DiffPoly genus_slice(int g) const;
    int max_genus() const;
    int max_jet_order() const;
    // True when every monomial has total degree n and genus 0.
    bool is_homogeneous(int n) const;

    // Multiply each monomial by f(g) where g is its genus exponent.
    template <typename F>
    DiffPoly map_genus_factor(F f) const {
        DiffPoly r;
        for (const auto& [k, c] : terms_) {
            Rational nc = c * f(k.genus);
            if (!nc.is_zero()) r.terms_.emplace(k, nc);
        }
        return r;
    }

    std::string to_text() const;
    std::string to_latex() const;
    std::string to_json() const;
    static DiffPoly parse_text(std::string_view s);
    static DiffPoly parse_json(std::string_view s);

private:
    TermMap terms_;  // canonical: no zero coefficients

    void add_term(const JetKey& key, const Rational& c);
    friend DiffPoly dx(const DiffPoly&);
    friend DiffPoly pd(const DiffPoly&, int);
};

// Total x-derivative: sum_k u_{k+1} d/du_k. Preserves degree and genus,
// raises the weight of every monomial by one.
DiffPoly dx(const DiffPoly& p);

// Formal partial derivative with respect to u_k.
DiffPoly pd(const DiffPoly& p, int k);

// Variational derivative sum_k (-1)^k dx^k (d/du_k). Annihilates dx-images.
DiffPoly var_delta(const DiffPoly& p);

// Formal antiderivative: the unique q with dx(q) = p and no constant term.
// Throws NotATotalDerivative when var_delta(p) != 0 (or p has a constant
// term), which by exactness is precisely when no antiderivative exists.
DiffPoly antiderivative(const DiffPoly& p);

// (1 - L d/dL): multiplies the L^2g component by (1 - 2g).
DiffPoly euler_lambda(const DiffPoly& p);

// (1/2) L d/dL: multiplies the L^2g component by g.
DiffPoly half_lambda_derivative(const DiffPoly& p);

// Occupied homogeneous (genus, degree, weight) cells.
std::set<GradingTriple> grading(const DiffPoly& p);

// All jet monomials of the given degree and weight, in a deterministic order.
std::vector<JetExp> slot_basis(int degree, int weight);

}  // namespace gdpoly
