#include "gdpoly/series.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace gdpoly {

int total_degree(const std::vector<int>& exp) {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

std::string SeriesMismatch::describe(const std::vector<int>& var_ids) const {
    std::ostringstream os;
    os << "coefficient of";
    if (key.genus > 0) os << " L^" << 2 * key.genus;
    bool any = false;
    for (size_t i = 0; i < key.exp.size(); ++i) {
        if (key.exp[i] == 0) continue;
        os << " t" << var_ids[i];
        if (key.exp[i] > 1) os << "^" << key.exp[i];
        any = true;
    }
    if (!any && key.genus == 0) os << " 1";
    os << ": got " << got.str() << ", want " << want.str();
    return os.str();
}

TruncatedSeries::TruncatedSeries(std::vector<int> var_ids, int max_degree,
                                 int max_genus)
    : var_ids_(std::move(var_ids)), max_degree_(max_degree),
      max_genus_(max_genus) {
    if (max_degree_ < 0 || max_genus_ < 0)
        throw std::invalid_argument("negative truncation bound");
    if (!std::is_sorted(var_ids_.begin(), var_ids_.end()) ||
        std::adjacent_find(var_ids_.begin(), var_ids_.end()) != var_ids_.end())
        throw std::invalid_argument("variable ids must be strictly ascending");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c,
                                          std::vector<int> var_ids,
                                          int max_degree, int max_genus) {
    TruncatedSeries s(std::move(var_ids), max_degree, max_genus);
    s.add_coeff(0, std::vector<int>(s.var_ids_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int var_id, std::vector<int> var_ids,
                                          int max_degree, int max_genus) {
    TruncatedSeries s(std::move(var_ids), max_degree, max_genus);
    std::vector<int> exp(s.var_ids_.size(), 0);
    exp[s.var_pos(var_id)] = 1;
    s.add_coeff(0, exp, Rational(1));
    return s;
}

int TruncatedSeries::var_pos(int var_id) const {
    auto it = std::lower_bound(var_ids_.begin(), var_ids_.end(), var_id);
    if (it == var_ids_.end() || *it != var_id)
        throw std::invalid_argument("t" + std::to_string(var_id) +
                                    " is not a variable of this series");
    return static_cast<int>(it - var_ids_.begin());
}

Rational TruncatedSeries::coeff(int genus, const std::vector<int>& exp) const {
    auto it = coeffs_.find(SeriesKey{genus, exp});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coeff_at(int genus,
                                   const std::map<int, int>& exp_by_var) const {
    std::vector<int> exp(var_ids_.size(), 0);
    for (const auto& [v, e] : exp_by_var) exp[var_pos(v)] = e;
    return coeff(genus, exp);
}

void TruncatedSeries::add_coeff(int genus, const std::vector<int>& exp,
                                const Rational& c) {
    if (exp.size() != var_ids_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero() || genus < 0 || genus > max_genus_ ||
        total_degree(exp) > max_degree_)
        return;
    auto [it, inserted] = coeffs_.emplace(SeriesKey{genus, exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.var_ids_ != var_ids_)
        throw std::invalid_argument("variable lists differ");
    for (const auto& [k, c] : o.coeffs_) add_coeff(k.genus, k.exp, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.var_ids_ != var_ids_)
        throw std::invalid_argument("variable lists differ");
    for (const auto& [k, c] : o.coeffs_) add_coeff(k.genus, k.exp, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.var_ids_ != b.var_ids_)
        throw std::invalid_argument("variable lists differ");
    TruncatedSeries r(a.var_ids_, std::min(a.max_degree_, b.max_degree_),
                      std::min(a.max_genus_, b.max_genus_));
    std::vector<int> exp(a.var_ids_.size());
    for (const auto& [ka, ca] : a.coeffs_) {
        const int da = total_degree(ka.exp);
        for (const auto& [kb, cb] : b.coeffs_) {
            if (ka.genus + kb.genus > r.max_genus_) continue;
            if (da + total_degree(kb.exp) > r.max_degree_) continue;
            for (size_t i = 0; i < exp.size(); ++i)
                exp[i] = ka.exp[i] + kb.exp[i];
            r.add_coeff(ka.genus + kb.genus, exp, ca * cb);
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& p) {
    TruncatedSeries r(p.var_ids_, p.max_degree_, p.max_genus_);
    if (c.is_zero()) return r;
    for (const auto& [k, pc] : p.coeffs_) r.coeffs_.emplace(k, c * pc);
    return r;
}

TruncatedSeries TruncatedSeries::derivative(int var_id) const {
    const int pos = var_pos(var_id);
    TruncatedSeries r(var_ids_, max_degree_, max_genus_);
    for (const auto& [k, c] : coeffs_) {
        const int e = k.exp[pos];
        if (e == 0) continue;
        SeriesKey nk = k;
        nk.exp[pos] -= 1;
        r.coeffs_.emplace(std::move(nk), Rational(e) * c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::genus_shift(int shift) const {
    if (shift < 0) throw std::invalid_argument("negative genus shift");
    TruncatedSeries r(var_ids_, max_degree_, max_genus_);
    for (const auto& [k, c] : coeffs_) {
        if (k.genus + shift > max_genus_) continue;
        r.coeffs_.emplace(SeriesKey{k.genus + shift, k.exp}, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int max_degree, int max_genus) const {
    TruncatedSeries r(var_ids_, max_degree, max_genus);
    for (const auto& [k, c] : coeffs_) r.add_coeff(k.genus, k.exp, c);
    return r;
}

std::optional<SeriesMismatch> TruncatedSeries::first_mismatch_within(
    const TruncatedSeries& o, int max_genus,
    const std::function<int(int)>& degree_bound) const {
    if (o.var_ids_ != var_ids_)
        throw std::invalid_argument("variable lists differ");
    std::map<SeriesKey, std::pair<Rational, Rational>> joined;
    for (const auto& [k, c] : coeffs_) joined[k].first = c;
    for (const auto& [k, c] : o.coeffs_) joined[k].second = c;
    for (const auto& [k, pair] : joined) {
        if (k.genus > max_genus) continue;
        if (total_degree(k.exp) > degree_bound(k.genus)) continue;
        if (pair.first != pair.second)
            return SeriesMismatch{k, pair.first, pair.second};
    }
    return std::nullopt;
}

std::string TruncatedSeries::to_text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rational a = c;
        if (a.sign() < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        bool shown = false;
        if (!a.is_one()) {
            os << a.str();
            shown = true;
        }
        if (k.genus > 0) {
            if (shown) os << "*";
            os << "L^" << 2 * k.genus;
            shown = true;
        }
        for (size_t i = 0; i < k.exp.size(); ++i) {
            if (k.exp[i] == 0) continue;
            if (shown) os << "*";
            os << "t" << var_ids_[i];
            if (k.exp[i] > 1) os << "^" << k.exp[i];
            shown = true;
        }
        if (!shown) os << "1";
    }
    return os.str();
}

std::string TruncatedSeries::to_json() const {
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (int v : var_ids_) vars.push_back("t" + std::to_string(v));
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [k, c] : coeffs_)
        coeffs.push_back({{"g", k.genus}, {"exp", k.exp}, {"c", c.str()}});
    return nlohmann::ordered_json{{"vars", vars},
                                  {"max_degree", max_degree_},
                                  {"max_genus", max_genus_},
                                  {"coeffs", coeffs}}
        .dump();
}

TruncatedSeries TruncatedSeries::parse_json(std::string_view s) {
    nlohmann::json j = nlohmann::json::parse(s);
    std::vector<int> var_ids;
    for (const auto& v : j.at("vars")) {
        const std::string name = v.get<std::string>();
        if (name.size() < 2 || name[0] != 't')
            throw std::invalid_argument("bad series variable name: " + name);
        var_ids.push_back(std::stoi(name.substr(1)));
    }
    TruncatedSeries out(std::move(var_ids), j.at("max_degree").get<int>(),
                        j.at("max_genus").get<int>());
    for (const auto& t : j.at("coeffs"))
        out.add_coeff(t.at("g").get<int>(),
                      t.at("exp").get<std::vector<int>>(),
                      Rational::parse(t.at("c").get<std::string>()));
    return out;
}

TruncatedSeries substitute(const DiffPoly& p, const TruncatedSeries& u,
                           bool* genus_overflow) {
    if (genus_overflow) *genus_overflow = false;
    TruncatedSeries out(u.var_ids(), u.max_degree(), u.max_genus());
    if (p.is_zero()) return out;

    std::vector<TruncatedSeries> du{u};
    const int kmax = p.max_jet_order();
    for (int k = 1; k <= kmax; ++k) du.push_back(du.back().derivative(0));

    for (const auto& [key, c] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(
            c, u.var_ids(), u.max_degree(), u.max_genus());
        for (const auto& [k, e] : key.jet)
            for (int i = 0; i < e; ++i) term = term * du[k];
        if (genus_overflow && !*genus_overflow) {
            for (const auto& [tk, tc] : term.coeffs()) {
                if (tk.genus + key.genus > u.max_genus()) {
                    *genus_overflow = true;
                    break;
                }
            }
        }
        out += term.genus_shift(key.genus);
    }
    return out;
}

}  // namespace gdpoly
