#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gdpoly {

// Exact rational number backed by GMP. Always canonical: lowest terms,
// positive denominator. Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den = 1);

    // Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
    static Rational parse(std::string_view s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const;
    Rational pow(long e) const;   // integer exponent, e < 0 allowed for nonzero values
    Rational inverse() const;

    // Exact quotient as a double (GMP handles operands outside double range).
    double to_double() const { return q_.get_d(); }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

// Generalized binomial coefficient binom(r, k) = r(r-1)...(r-k+1)/k! for rational r.
Rational binomial(const Rational& r, long k);

mpz_class factorial(long n);

}  // namespace gdpoly
