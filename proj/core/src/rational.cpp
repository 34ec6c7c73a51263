#include "gdpoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gdpoly {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    std::string str(s);
    // mpq_set_str accepts "p/q" but not whitespace or empty parts; validate first.
    size_t slash = str.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(str)) throw std::invalid_argument("Rational: bad integer '" + str + "'");
    } else {
        if (!valid_int(std::string_view(str).substr(0, slash)) ||
            !valid_int(std::string_view(str).substr(slash + 1)))
            throw std::invalid_argument("Rational: bad rational '" + str + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), str.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: bad rational '" + str + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + str + "'");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw std::invalid_argument("Rational: negative power of zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), n);
    return inv ? Rational(den, num) : Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den(), num());
}

std::string Rational::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(const Rational& r, long k) {
    if (k < 0) return Rational(0);
    Rational acc(1);
    for (long i = 0; i < k; ++i)
        acc *= (r - Rational(i)) / Rational(i + 1);
    return acc;
}

mpz_class factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace gdpoly
