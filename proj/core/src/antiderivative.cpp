#include "gdpoly/diffpoly.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace gdpoly {

namespace {

// Exact Gaussian elimination for M x = rhs with unique solution expected.
// Returns false when the system is inconsistent.
bool solve_exact(std::vector<std::vector<Rational>>& M,
                 std::vector<Rational>& rhs, std::vector<Rational>& x) {
    const size_t rows = M.size();
    const size_t cols = rows == 0 ? 0 : M[0].size();
    x.assign(cols, Rational(0));
    std::vector<size_t> pivot_col(rows, cols);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && M[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = M[r][c].inverse();
        for (size_t j = c; j < cols; ++j) M[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            const Rational f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return false;
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return true;
}

}  // namespace

DiffPoly antiderivative(const DiffPoly& p) {
    if (p.is_zero()) return DiffPoly::zero();
    if (p.has_constant_term())
        throw NotATotalDerivative(
            "no antiderivative: the polynomial has a constant term",
            p.to_text());
    const DiffPoly obstruction = var_delta(p);
    if (!obstruction.is_zero())
        throw NotATotalDerivative(
            "no antiderivative: variational derivative is nonzero (" +
                obstruction.to_text() + ")",
            p.to_text());

    // Split into homogeneous (genus, degree, weight) slots; dx is injective
    // from slot (d, w-1) into slot (d, w) for d >= 1, so each slot solve has
    // a unique solution once the obstruction vanishes.
    std::map<GradingTriple, std::vector<std::pair<JetExp, Rational>>> slots;
    for (const auto& [key, c] : p.terms())
        slots[{key.genus, key.degree(), key.weight()}].emplace_back(key.jet, c);

    DiffPoly result;
    for (const auto& [slot, target_terms] : slots) {
        if (slot.weight == 0 || slot.degree == 0)
            throw std::logic_error("antiderivative: slot (" +
                                   std::to_string(slot.degree) + "," +
                                   std::to_string(slot.weight) +
                                   ") cannot be a dx image");
        const std::vector<JetExp> basis =
            slot_basis(slot.degree, slot.weight - 1);
        std::map<JetExp, size_t> row_of;
        for (const auto& img : slot_basis(slot.degree, slot.weight))
            row_of.emplace(img, row_of.size());

        std::vector<std::vector<Rational>> M(
            row_of.size(), std::vector<Rational>(basis.size(), Rational(0)));
        for (size_t j = 0; j < basis.size(); ++j) {
            const DiffPoly img = dx(DiffPoly::monomial(Rational(1), 0, basis[j]));
            for (const auto& [key, c] : img.terms())
                M[row_of.at(key.jet)][j] = c;
        }
        std::vector<Rational> rhs(row_of.size(), Rational(0));
        for (const auto& [jet, c] : target_terms) rhs[row_of.at(jet)] = c;

        std::vector<Rational> x;
        if (!solve_exact(M, rhs, x))
            throw std::logic_error(
                "antiderivative: inconsistent slot solve after a vanishing "
                "obstruction");
        for (size_t j = 0; j < basis.size(); ++j)
            if (!x[j].is_zero())
                result += DiffPoly::monomial(x[j], slot.genus, basis[j]);
    }
    return result;
}

}  // namespace gdpoly
