#include "gdpoly/action.hpp"

#include <sstream>

namespace gdpoly {

DiffPoly ActionDensity::evaluate(const std::map<int, Rational>& t) const {
    DiffPoly out;
    for (const auto& [n, tn] : blocks) {
        Rational factor(0);
        if (auto it = t.find(n); it != t.end()) factor = it->second;
        if (n == 1) factor -= Rational(1);
        if (!factor.is_zero()) out += factor * tn;
    }
    return out;
}

std::string ActionDensity::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, tn] : blocks) {
        if (!first) os << " + ";
        first = false;
        if (n == 1)
            os << "(t1 - 1)";
        else
            os << "t" << n;
        os << "*(" << tn.to_text() << ")";
    }
    return os.str();
}

std::string ActionDensity::to_latex() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, tn] : blocks) {
        if (!first) os << " + ";
        first = false;
        if (n == 1)
            os << "(t_1 - 1)";
        else
            os << "t_" << (n < 10 ? std::to_string(n)
                                  : "{" + std::to_string(n) + "}");
        os << " \\left( " << tn.to_latex() << " \\right)";
    }
    return os.str();
}

ActionDensity lagrangian_expansion(GDTable& table, int max_n) {
    if (max_n < 0) throw std::invalid_argument("negative max_n");
    ActionDensity d;
    d.max_n = max_n;
    // T_1 always contributes through the delta_{n1} shift, so the n = 1 block
    // is kept even when max_n = 0.
    table.extend(std::max(max_n, 1));
    for (int n = 0; n <= std::max(max_n, 1); ++n)
        d.blocks.emplace_back(n, table.T(n));
    return d;
}

std::vector<EulerLagrangeCheck> euler_lagrange_check(GDTable& table, int max_n,
                                                     int max_g) {
    std::vector<EulerLagrangeCheck> out;
    table.extend(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const DiffPoly lhs = var_delta(table.T(n));
        for (int g = 0; g <= max_g; ++g) {
            EulerLagrangeCheck c{n, g, false, ""};
            const DiffPoly got = lhs.genus_slice(g);
            const DiffPoly want =
                Rational(1 - 2 * g) * table.R(n).genus_slice(g);
            c.pass = got == want;
            if (!c.pass)
                c.detail = "got " + got.to_text() + " want " + want.to_text();
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace gdpoly
