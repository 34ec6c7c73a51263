#include "gdpoly/gd_table.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gdpoly {

namespace {

DiffPoly lambda2_quarter() {
    return DiffPoly::monomial(Rational(1, 4), 1, {});
}

std::string clip(std::string s, size_t n = 200) {
    if (s.size() > n) s = s.substr(0, n) + "...";
    return s;
}

}  // namespace

DiffPoly lenard_step(const DiffPoly& rn, int n, LenardForm form) {
    const DiffPoly u = DiffPoly::u(0);
    const Rational inv(1, 2 * static_cast<long>(n) + 1);
    const DiffPoly drn = dx(rn);
    switch (form) {
        case LenardForm::Primary: {
            DiffPoly rhs = DiffPoly::u(1) * rn + Rational(2) * (u * drn) +
                           lambda2_quarter() * dx(dx(drn));
            return inv * antiderivative(rhs);
        }
        case LenardForm::IntegrateUdR: {
            DiffPoly head = u * rn + lambda2_quarter() * dx(drn);
            return inv * (head + antiderivative(u * drn));
        }
        case LenardForm::IntegrateU1R: {
            DiffPoly head = Rational(2) * (u * rn) + lambda2_quarter() * dx(drn);
            return inv * (head - antiderivative(DiffPoly::u(1) * rn));
        }
    }
    throw std::invalid_argument("unknown Lenard form");
}

GDTable::GDTable() {
    r_.push_back(DiffPoly::constant(Rational(1)));
    t_.push_back(DiffPoly::u(0));
}

void GDTable::extend(int n) {
    if (n < 0) throw std::invalid_argument("negative table index");
    while (max_n() < n) {
        const int m = max_n();
        r_.push_back(lenard_step(r_[m], m));
        t_.push_back(antiderivative(DiffPoly::u(1) * r_.back()));
    }
}

const DiffPoly& GDTable::R(int n) {
    extend(n);
    return r_[n];
}

const DiffPoly& GDTable::T(int n) {
    extend(n);
    return t_[n];
}

std::string GDTable::to_json() const {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int n = 0; n <= max_n(); ++n) {
        entries.push_back({{"n", n},
                           {"R", nlohmann::ordered_json::parse(r_[n].to_json())},
                           {"T", nlohmann::ordered_json::parse(t_[n].to_json())}});
    }
    nlohmann::ordered_json j{{"schema_version", kSchemaVersion},
                             {"kind", "gd_table"},
                             {"normalization", std::string(kNormalization)},
                             {"max_n", max_n()},
                             {"entries", entries}};
    return j.dump(2) + "\n";
}

GDTable GDTable::from_json(std::string_view s) {
    nlohmann::json j = nlohmann::json::parse(s);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::runtime_error("gd_table: schema version mismatch");
    if (j.at("kind").get<std::string>() != "gd_table")
        throw std::runtime_error("gd_table: wrong cache kind");
    GDTable t;
    const int max_n = j.at("max_n").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != max_n + 1)
        throw std::runtime_error("gd_table: entry count mismatch");
    for (int n = 0; n <= max_n; ++n) {
        const auto& e = entries.at(n);
        if (e.at("n").get<int>() != n)
            throw std::runtime_error("gd_table: entries out of order");
        DiffPoly r = DiffPoly::parse_json(e.at("R").dump());
        DiffPoly tt = DiffPoly::parse_json(e.at("T").dump());
        if (n == 0) {
            if (r != t.r_[0] || tt != t.t_[0])
                throw std::runtime_error("gd_table: bad base entry");
            continue;
        }
        t.r_.push_back(std::move(r));
        t.t_.push_back(std::move(tt));
    }
    return t;
}

PklEntry compute_pkl(GDTable& table, int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative P_{k,l} index");
    DiffPoly rhs = table.R(k) * dx(table.R(l));
    return PklEntry{k, l, antiderivative(rhs)};
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    os << checks.size() << " checks, " << failed << " failed";
    return os.str();
}

VerifyReport verify_identities(GDTable& table, int max_n) {
    if (max_n < 1) throw std::invalid_argument("verify needs max_n >= 1");
    VerifyReport rep;
    rep.max_n = max_n;
    table.extend(max_n + 1);

    auto record = [&rep](const std::string& family, int n, const DiffPoly& got,
                         const DiffPoly& want) {
        IdentityCheck c{family, n, got == want, ""};
        if (!c.pass)
            c.detail = clip("got " + got.to_text() + " want " + want.to_text());
        rep.checks.push_back(std::move(c));
    };

    const DiffPoly u = DiffPoly::u(0);
    for (int n = 0; n <= max_n; ++n) {
        const DiffPoly& rn = table.R(n);

        record("a", n, var_delta(table.R(n + 1)), rn);

        DiffPoly lemma_rhs =
            rn.map_genus_factor([n](int g) { return Rational(n + 1 - g); });
        record("b", n, var_delta(u * rn), lemma_rhs);

        record("c", n, var_delta(table.T(n)), euler_lambda(rn));

        bool graded = true;
        std::string detail;
        for (const auto& slot : grading(rn)) {
            if (slot.degree != n - slot.genus || slot.weight != 2 * slot.genus) {
                graded = false;
                std::ostringstream os;
                os << "slot (g=" << slot.genus << ",d=" << slot.degree
                   << ",w=" << slot.weight << ") violates R_" << n;
                detail = os.str();
                break;
            }
        }
        rep.checks.push_back(IdentityCheck{"d", n, graded, detail});

        DiffPoly un_over_nfact =
            DiffPoly::monomial(Rational(mpz_class(1), factorial(n)), 0, {{0, n}});
        record("e", n, rn.genus_part(0), un_over_nfact);
    }
    return rep;
}

std::string latex_table(GDTable& table, int max_n) {
    std::ostringstream os;
    for (int n = 0; n <= max_n; ++n)
        os << "R_" << (n < 10 ? "" : "{") << n << (n < 10 ? "" : "}") << " &= "
           << table.R(n).to_latex() << " \\\\\n";
    for (int n = 0; n <= max_n; ++n)
        os << "T_" << (n < 10 ? "" : "{") << n << (n < 10 ? "" : "}") << " &= "
           << table.T(n).to_latex() << " \\\\\n";
    return os.str();
}

}  // namespace gdpoly
