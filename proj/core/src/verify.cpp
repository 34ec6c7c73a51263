#include "gdpoly/verify.hpp"

#include "gdpoly/diffpoly.hpp"
#include "gdpoly/random_poly.hpp"

namespace gdpoly {

namespace {

DiffPoly drop_constant(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [k, c] : p.terms())
        if (!k.is_constant()) r += DiffPoly::monomial(c, k.genus, k.jet);
    return r;
}

using CaseFn = bool (*)(RandomPolyGen&, int, std::string&);

PropertySuiteResult run_suite(const std::string& name, std::uint64_t seed,
                              int cases, CaseFn fn) {
    PropertySuiteResult res;
    res.name = name;
    res.cases = cases;
    RandomPolyGen gen(seed);
    for (int i = 0; i < cases; ++i) {
        std::string detail;
        if (!fn(gen, i, detail)) {
            ++res.failures;
            if (res.first_failure.empty())
                res.first_failure = "case " + std::to_string(i) + ": " + detail;
        }
    }
    return res;
}

bool case_ring_axioms(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly a = g.next(), b = g.next(), c = g.next();
    if ((a * b) * c != a * (b * c)) {
        detail = "associativity failed";
        return false;
    }
    if (a * (b + c) != a * b + a * c) {
        detail = "distributivity failed";
        return false;
    }
    if (a * b != b * a) {
        detail = "commutativity failed";
        return false;
    }
    return true;
}

bool case_commutator(RandomPolyGen& g, int i, std::string& detail) {
    const DiffPoly p = g.next();
    const int k = i % 6;
    const DiffPoly lhs = pd(dx(p), k) - dx(pd(p, k));
    const DiffPoly rhs = k == 0 ? DiffPoly::zero() : pd(p, k - 1);
    if (lhs != rhs) {
        detail = "[pd_" + std::to_string(k) + ", dx] mismatch on " + p.to_text();
        return false;
    }
    return true;
}

bool case_delta_dx(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly p = g.next();
    if (!var_delta(dx(p)).is_zero()) {
        detail = "delta(dx(p)) != 0 for " + p.to_text();
        return false;
    }
    return true;
}

bool case_antiderivative_roundtrip(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly q = drop_constant(g.next());
    const DiffPoly back = antiderivative(dx(q));
    if (back != q) {
        detail = "antiderivative(dx(q)) != q for " + q.to_text();
        return false;
    }
    return true;
}

bool case_obstruction_raises(RandomPolyGen& g, int, std::string& detail) {
    DiffPoly p = drop_constant(g.next());
    while (var_delta(p).is_zero()) p = drop_constant(g.next());
    try {
        antiderivative(p);
    } catch (const NotATotalDerivative&) {
        return true;
    }
    detail = "no exception for " + p.to_text();
    return false;
}

bool case_delta_u1_delta(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly f = g.next();
    const DiffPoly val = var_delta(DiffPoly::u(1) * var_delta(f));
    if (!val.is_zero()) {
        detail = "delta(u1 delta f) != 0 for " + f.to_text();
        return false;
    }
    return true;
}

bool case_delta_u_delta(RandomPolyGen& g, int i, std::string& detail) {
    const int n = 1 + i % 6;
    const DiffPoly f = g.next_homogeneous(n);
    const DiffPoly df = var_delta(f);
    if (var_delta(DiffPoly::u(0) * df) != Rational(n) * df) {
        detail = "delta(u delta f) != " + std::to_string(n) + " delta f for " +
                 f.to_text();
        return false;
    }
    return true;
}

bool case_dx_slot_shift(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly p = g.next();
    const auto before = grading(p);
    for (const auto& slot : grading(dx(p))) {
        if (!before.count({slot.genus, slot.degree, slot.weight - 1})) {
            detail = "dx created slot with no (d, w-1) source in " + p.to_text();
            return false;
        }
    }
    return true;
}

bool case_text_roundtrip(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly p = g.next();
    if (DiffPoly::parse_text(p.to_text()) != p) {
        detail = "text round trip broke " + p.to_text();
        return false;
    }
    return true;
}

bool case_json_roundtrip(RandomPolyGen& g, int, std::string& detail) {
    const DiffPoly p = g.next();
    if (DiffPoly::parse_json(p.to_json()) != p) {
        detail = "json round trip broke " + p.to_text();
        return false;
    }
    return true;
}

}  // namespace

std::vector<PropertySuiteResult> run_property_suites(std::uint64_t seed,
                                                     int cases_per_suite) {
    const std::pair<const char*, CaseFn> suites[] = {
        {"ring_axioms", case_ring_axioms},
        {"commutator_pd_dx", case_commutator},
        {"delta_after_dx_is_zero", case_delta_dx},
        {"antiderivative_roundtrip", case_antiderivative_roundtrip},
        {"obstruction_raises", case_obstruction_raises},
        {"delta_u1_delta_is_zero", case_delta_u1_delta},
        {"delta_u_delta_homogeneous", case_delta_u_delta},
        {"dx_slot_shift", case_dx_slot_shift},
        {"text_roundtrip", case_text_roundtrip},
        {"json_roundtrip", case_json_roundtrip},
    };
    std::vector<PropertySuiteResult> out;
    std::uint64_t s = seed;
    for (const auto& [name, fn] : suites)
        out.push_back(run_suite(name, s++, cases_per_suite, fn));
    return out;
}

}  // namespace gdpoly
