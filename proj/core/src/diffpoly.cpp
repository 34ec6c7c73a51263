#include "gdpoly/diffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace gdpoly {

int JetKey::degree() const {
    int d = 0;
    for (const auto& [k, e] : jet) d += e;
    return d;
}

int JetKey::weight() const {
    int w = 0;
    for (const auto& [k, e] : jet) w += k * e;
    return w;
}

bool JetKeyLess::operator()(const JetKey& a, const JetKey& b) const {
    if (a.genus != b.genus) return a.genus < b.genus;
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    auto ia = a.jet.begin();
    auto ib = b.jet.begin();
    while (ia != a.jet.end() && ib != b.jet.end()) {
        // The key holding a positive exponent at the smaller order wins.
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    // Equal degree and weight with a common prefix forces both to end here.
    return false;
}

DiffPoly DiffPoly::constant(const Rational& c) {
    DiffPoly p;
    if (!c.is_zero()) p.terms_.emplace(JetKey{}, c);
    return p;
}

DiffPoly DiffPoly::u(int order) {
    DiffPoly p;
    p.terms_.emplace(JetKey{0, {{order, 1}}}, Rational(1));
    return p;
}

DiffPoly DiffPoly::monomial(const Rational& c, int genus, JetExp jet) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    std::sort(jet.begin(), jet.end());
    JetExp norm;
    for (const auto& [k, e] : jet) {
        if (k < 0 || e < 0) throw std::invalid_argument("bad jet entry");
        if (e == 0) continue;
        if (!norm.empty() && norm.back().first == k)
            norm.back().second += e;
        else
            norm.emplace_back(k, e);
    }
    DiffPoly p;
    if (!c.is_zero()) p.terms_.emplace(JetKey{genus, std::move(norm)}, c);
    return p;
}

Rational DiffPoly::coeff(const JetKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool DiffPoly::has_constant_term() const {
    for (const auto& [k, c] : terms_)
        if (k.is_constant()) return true;
    return false;
}

void DiffPoly::add_term(const JetKey& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

namespace {

JetExp merge_jets(const JetExp& a, const JetExp& b) {
    JetExp r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            r.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            r.push_back(*ib++);
        } else {
            r.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

}  // namespace

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            JetKey k{ka.genus + kb.genus, merge_jets(ka.jet, kb.jet)};
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

DiffPoly operator*(const Rational& c, const DiffPoly& p) {
    DiffPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, pc] : p.terms_) r.terms_.emplace(k, c * pc);
    return r;
}

DiffPoly DiffPoly::genus_part(int g) const {
    DiffPoly r;
    for (const auto& [k, c] : terms_)
        if (k.genus == g) r.terms_.emplace(JetKey{0, k.jet}, c);
    return r;
}

DiffPoly DiffPoly::genus_slice(int g) const {
    DiffPoly r;
    for (const auto& [k, c] : terms_)
        if (k.genus == g) r.terms_.emplace(k, c);
    return r;
}

int DiffPoly::max_genus() const {
    int g = 0;
    for (const auto& [k, c] : terms_) g = std::max(g, k.genus);
    return g;
}

int DiffPoly::max_jet_order() const {
    int m = -1;
    for (const auto& [k, c] : terms_)
        if (!k.jet.empty()) m = std::max(m, k.jet.back().first);
    return m;
}

bool DiffPoly::is_homogeneous(int n) const {
    for (const auto& [k, c] : terms_)
        if (k.genus != 0 || k.degree() != n) return false;
    return true;
}

DiffPoly dx(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [key, c] : p.terms_) {
        for (size_t i = 0; i < key.jet.size(); ++i) {
            const auto [k, e] = key.jet[i];
            JetExp jet = key.jet;
            if (e == 1)
                jet.erase(jet.begin() + static_cast<long>(i));
            else
                jet[i].second -= 1;
            jet = merge_jets(jet, JetExp{{k + 1, 1}});
            r.add_term(JetKey{key.genus, std::move(jet)}, c * Rational(e));
        }
    }
    return r;
}

DiffPoly pd(const DiffPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("negative jet order");
    DiffPoly r;
    for (const auto& [key, c] : p.terms_) {
        auto it = std::lower_bound(key.jet.begin(), key.jet.end(),
                                   std::make_pair(k, 0));
        if (it == key.jet.end() || it->first != k) continue;
        const int e = it->second;
        JetExp jet = key.jet;
        auto jt = jet.begin() + (it - key.jet.begin());
        if (e == 1)
            jet.erase(jt);
        else
            jt->second -= 1;
        r.add_term(JetKey{key.genus, std::move(jet)}, c * Rational(e));
    }
    return r;
}

DiffPoly var_delta(const DiffPoly& p) {
    DiffPoly r;
    const int kmax = p.max_jet_order();
    for (int k = 0; k <= kmax; ++k) {
        DiffPoly q = pd(p, k);
        if (q.is_zero()) continue;
        for (int j = 0; j < k; ++j) q = dx(q);
        if (k % 2 == 0)
            r += q;
        else
            r -= q;
    }
    return r;
}

DiffPoly euler_lambda(const DiffPoly& p) {
    return p.map_genus_factor([](int g) { return Rational(1 - 2 * g); });
}

DiffPoly half_lambda_derivative(const DiffPoly& p) {
    return p.map_genus_factor([](int g) { return Rational(g); });
}

std::set<GradingTriple> grading(const DiffPoly& p) {
    std::set<GradingTriple> s;
    for (const auto& [k, c] : p.terms())
        s.insert(GradingTriple{k.genus, k.degree(), k.weight()});
    return s;
}

std::vector<JetExp> slot_basis(int degree, int weight) {
    std::vector<JetExp> out;
    if (degree < 0 || weight < 0) return out;
    if (degree == 0) {
        if (weight == 0) out.push_back({});
        return out;
    }
    // Choose exponents for orders weight..1, then u0 soaks up the rest.
    JetExp cur;
    std::function<void(int, int, int)> gen = [&](int k, int d, int w) {
        if (k == 0) {
            if (w != 0) return;
            JetExp jet;
            if (d > 0) jet.emplace_back(0, d);
            for (auto it = cur.rbegin(); it != cur.rend(); ++it)
                jet.push_back(*it);
            out.push_back(std::move(jet));
            return;
        }
        const int emax = std::min(d, w / k);
        for (int e = 0; e <= emax; ++e) {
            if (e > 0) cur.emplace_back(k, e);
            gen(k - 1, d - e, w - e * k);
            if (e > 0) cur.pop_back();
        }
    };
    gen(weight, degree, weight);
    return out;
}

// --- printing -------------------------------------------------------------

namespace {

void print_monomial_text(std::ostream& os, const JetKey& key, const Rational& c,
                         bool leading) {
    Rational a = c;
    if (a.sign() < 0) {
        os << (leading ? "-" : " - ");
        a = -a;
    } else if (!leading) {
        os << " + ";
    }
    bool coeff_shown = !a.is_one() || (key.genus == 0 && key.jet.empty());
    if (coeff_shown) os << a.str();
    bool first = !coeff_shown;
    if (key.genus > 0) {
        if (!first) os << "*";
        os << "L^" << 2 * key.genus;
        first = false;
    }
    for (const auto& [k, e] : key.jet) {
        if (!first) os << "*";
        os << "u" << k;
        if (e > 1) os << "^" << e;
        first = false;
    }
}

void print_monomial_latex(std::ostream& os, const JetKey& key,
                          const Rational& c, bool leading) {
    Rational a = c;
    if (a.sign() < 0) {
        os << (leading ? "-" : " - ");
        a = -a;
    } else if (!leading) {
        os << " + ";
    }
    const bool bare = key.genus == 0 && key.jet.empty();
    if (!a.is_one() || bare) {
        if (a.is_integer())
            os << a.num().get_str();
        else
            os << "\\frac{" << a.num().get_str() << "}{" << a.den().get_str()
               << "}";
        if (!bare) os << " ";
    }
    bool first = true;
    for (const auto& [k, e] : key.jet) {
        if (!first) os << " ";
        if (k == 0)
            os << "u";
        else if (k == 1)
            os << "u_x";
        else
            os << "u_{" << k << "x}";
        if (e > 1) os << "^" << (e < 10 ? "" : "{") << e << (e < 10 ? "" : "}");
        first = false;
    }
    if (key.genus > 0) {
        if (!first) os << " ";
        if (key.genus == 1)
            os << "\\lambda^2";
        else
            os << "\\lambda^{" << 2 * key.genus << "}";
    }
}

}  // namespace

std::string DiffPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [k, c] : terms_) {
        print_monomial_text(os, k, c, leading);
        leading = false;
    }
    return os.str();
}

std::string DiffPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [k, c] : terms_) {
        print_monomial_latex(os, k, c, leading);
        leading = false;
    }
    return os.str();
}

// --- text parsing ----------------------------------------------------------

namespace {

struct TextCursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(i) + ": " + msg);
    }
    long read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000L) fail("integer out of range");
            ++i;
        }
        return v;
    }
    std::string read_digits() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected number");
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        return std::string(s.substr(b, i - b));
    }
};

}  // namespace

DiffPoly DiffPoly::parse_text(std::string_view s) {
    TextCursor c{s};
    if (c.done()) c.fail("empty input");
    DiffPoly out;
    bool first_term = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.i;
        } else if (!first_term) {
            c.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        Rational coeff(sign);
        int genus = 0;
        JetExp jet;
        bool want_factor = true;
        bool any_factor = false;
        while (want_factor) {
            c.skip_ws();
            if (c.i >= c.s.size()) {
                if (!any_factor) c.fail("dangling operator");
                break;
            }
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = c.read_digits();
                std::string frac = num;
                c.skip_ws();
                if (c.i < c.s.size() && c.peek() == '/') {
                    ++c.i;
                    frac += "/" + c.read_digits();
                }
                coeff *= Rational::parse(frac);
            } else if (ch == 'L') {
                ++c.i;
                c.skip_ws();
                if (c.i >= c.s.size() || c.peek() != '^')
                    c.fail("L must carry an explicit even power");
                ++c.i;
                long p = c.read_uint();
                if (p <= 0 || p % 2 != 0)
                    c.fail("L power must be positive and even");
                genus += static_cast<int>(p / 2);
            } else if (ch == 'u') {
                ++c.i;
                long k = c.read_uint();
                long e = 1;
                c.skip_ws();
                if (c.i < c.s.size() && c.peek() == '^') {
                    ++c.i;
                    e = c.read_uint();
                    if (e <= 0) c.fail("exponent must be positive");
                }
                jet.emplace_back(static_cast<int>(k), static_cast<int>(e));
            } else {
                c.fail("unexpected character");
            }
            any_factor = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.peek() == '*') {
                ++c.i;
            } else {
                want_factor = false;
            }
        }
        out += DiffPoly::monomial(coeff, genus, std::move(jet));
    }
    return out;
}

// --- JSON ------------------------------------------------------------------

std::string DiffPoly::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : terms_) {
        nlohmann::ordered_json jet = nlohmann::ordered_json::object();
        for (const auto& [order, e] : k.jet) jet[std::to_string(order)] = e;
        terms.push_back({{"coeff", c.str()}, {"genus", k.genus}, {"jet", jet}});
    }
    return nlohmann::ordered_json{{"terms", terms}}.dump();
}

DiffPoly DiffPoly::parse_json(std::string_view s) {
    nlohmann::json j = nlohmann::json::parse(s);
    DiffPoly out;
    for (const auto& t : j.at("terms")) {
        JetExp jet;
        for (const auto& [order, e] : t.at("jet").items())
            jet.emplace_back(std::stoi(order), e.get<int>());
        out += DiffPoly::monomial(Rational::parse(t.at("coeff").get<std::string>()),
                                  t.at("genus").get<int>(), std::move(jet));
    }
    return out;
}

}  // namespace gdpoly
