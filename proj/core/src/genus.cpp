#include "gdpoly/genus.hpp"

#include <cmath>
#include <sstream>

namespace gdpoly {

namespace {

double log_mpz(const mpz_class& v) {
    signed long exp = 0;
    const double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp) * M_LN2;
}

std::string latex_rational(const Rational& r) {
    Rational a = r;
    std::string sign;
    if (a.sign() < 0) {
        sign = "-";
        a = -a;
    }
    if (a.is_integer()) return sign + a.num().get_str();
    return sign + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() +
           "}";
}

}  // namespace

std::vector<Rational> c_sequence(int g_max) {
    std::vector<Rational> c{Rational(-1)};
    for (int g = 1; g <= g_max; ++g) {
        Rational v(0);
        for (int g1 = 1; g1 <= g - 1; ++g1) v += c[g1] * c[g - g1];
        v *= Rational(1, 2);
        v += Rational((5L * g - 4) * (5L * g - 6), 12) * c[g - 1];
        c.push_back(v);
    }
    return c;
}

GenusClosedForm closed_form_ug(int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    GenusClosedForm f;
    f.g = g;
    f.c_g = c_sequence(g)[g];
    f.t2_power = 3 * g - 1;
    f.s_power_num = -(5 * g - 1);
    f.extra_t2_inverse = (g == 0);
    return f;
}

std::string GenusClosedForm::to_text() const {
    if (g == 0) return "(1 - (1-2*t0*t2)^(1/2))/t2";
    std::ostringstream os;
    os << c_g.str() << "*t2^" << t2_power << "*(1-2*t0*t2)^(";
    if (s_power_num % 2 == 0)
        os << s_power_num / 2;
    else
        os << s_power_num << "/2";
    os << ")";
    return os.str();
}

std::string GenusClosedForm::to_latex() const {
    if (g == 0) return "\\frac{1-(1-2t_0t_2)^{1/2}}{t_2}";
    std::ostringstream os;
    os << latex_rational(c_g) << " t_2^" << (t2_power < 10 ? "" : "{")
       << t2_power << (t2_power < 10 ? "" : "}") << " (1-2t_0t_2)^{";
    if (s_power_num % 2 == 0)
        os << s_power_num / 2;
    else
        os << s_power_num << "/2";
    os << "}";
    return os.str();
}

TruncatedSeries GenusClosedForm::expand(int max_degree) const {
    TruncatedSeries out({0, 2}, max_degree, g);
    // (1-2t0t2)^{p/2} = sum_m binom(p/2, m) (-2)^m t0^m t2^m; combined with
    // the prefactor c_g t2^{3g-1} every t2 power is nonnegative, including
    // the g = 0 case where the m = 0 term cancels against t2^{-1}.
    // The only negative t2 power is the g = 0, m = 0 term, and there the
    // delta_{g,0} t_2^{-1} cancels it exactly (c_0 = -1), so skipping
    // negative exponents loses nothing.
    const Rational alpha(s_power_num, 2);
    Rational pow_m2(1);  // (-2)^m
    for (int m = 0;; ++m) {
        const int e0 = m, e2 = t2_power + m;
        if (e2 >= 0) {
            if (e0 + e2 > max_degree) break;
            out.add_coeff(g, {e0, e2}, c_g * binomial(alpha, m) * pow_m2);
        }
        pow_m2 *= Rational(-2);
    }
    return out;
}

TruncatedSeries ug_by_recursion(int g, int max_degree) {
    if (g < 0 || max_degree < 0) throw std::invalid_argument("negative bound");
    const std::vector<int> vars{0, 2};
    const int work = max_degree + 2 * g;

    // Genus-0 seed: fixed point of u0 = t0 + (t2/2) u0^2, all at genus 0.
    std::vector<TruncatedSeries> u;
    {
        TruncatedSeries u0 = TruncatedSeries::variable(0, vars, work, 0);
        const TruncatedSeries t0 = u0;
        const TruncatedSeries t2 = TruncatedSeries::variable(2, vars, work, 0);
        for (int pass = 0; pass <= work + 1; ++pass) {
            TruncatedSeries next = t0;
            next += Rational(1, 2) * (t2 * (u0 * u0));
            if (next == u0) break;
            u0 = std::move(next);
        }
        u.push_back(std::move(u0));
    }

    const TruncatedSeries t2 = TruncatedSeries::variable(2, vars, work, 0);
    // Resolvent t2/(1 - t2 u0) as a geometric series; t2 u0 has no constant
    // term, so the powers terminate at the working degree.
    TruncatedSeries resolvent(vars, work, 0);
    {
        const TruncatedSeries x = t2 * u[0];
        TruncatedSeries pow = TruncatedSeries::constant(Rational(1), vars, work, 0);
        for (int j = 0; 2 * j <= work; ++j) {
            resolvent += pow;
            pow = pow * x;
        }
        resolvent = t2 * resolvent;
    }

    for (int h = 1; h <= g; ++h) {
        TruncatedSeries rhs(vars, work, 0);
        for (int g1 = 1; g1 <= h - 1; ++g1) rhs += u[g1] * u[h - g1];
        rhs = Rational(1, 2) * rhs;
        rhs += Rational(1, 12) * u[h - 1].derivative(0).derivative(0);
        u.push_back(resolvent * rhs);
    }
    TruncatedSeries out(vars, max_degree, g);
    for (const auto& [k, c] : u[g].coeffs()) out.add_coeff(g, k.exp, c);
    return out;
}

ASequence::ASequence(int n_max) { extend(n_max); }

void ASequence::extend(int n_max) {
    while (static_cast<int>(values_.size()) < n_max) {
        const int n = static_cast<int>(values_.size()) + 1;
        mpz_class v;
        if (n == 1) {
            v = 1;  // 2(5-4)(5-6) a_0 = 2 * (-1) * (-1/2)
        } else {
            mpz_class conv = 0;
            for (int k = 1; 2 * k < n; ++k) conv += values_[k - 1] * values_[n - k - 1];
            conv *= 2;
            if (n % 2 == 0) {
                const mpz_class& mid = values_[n / 2 - 1];
                conv += mid * mid;
            }
            v = conv + 2L * (5L * n - 4) * (5L * n - 6) * values_[n - 2];
        }
        values_.push_back(std::move(v));
    }
}

const mpz_class& ASequence::a(int n) const {
    if (n < 1 || n > n_max())
        throw std::out_of_range("a_n index outside the computed range");
    return values_[n - 1];
}

Rational ASequence::c(int g) const {
    if (g == 0) return Rational(-1);
    return Rational(mpz_class(2 * a(g)), Rational(24).pow(g).num());
}

AsymptoticsReport asymptotics(const ASequence& seq, int n_max) {
    if (n_max < 5) throw std::invalid_argument("asymptotics needs n_max >= 5");
    if (seq.n_max() < n_max)
        throw std::invalid_argument("sequence too short for the report");
    AsymptoticsReport rep;
    rep.n_max = n_max;
    rep.beta = 5.0 * std::sqrt(15.0) / (2.0 * M_PI * M_PI);
    rep.rho_target = 25.0 / (12.0 * std::exp(2.0));
    rep.r.assign(n_max + 1, 0.0);
    rep.rho.assign(n_max + 1, 0.0);
    const double ln50 = std::log(50.0), ln24 = std::log(24.0);
    for (int n = 1; n <= n_max; ++n) {
        const double la = log_mpz(seq.a(n));
        rep.r[n] = std::exp(la - (n - 1) * ln50 - 2.0 * std::lgamma(n));
        rep.rho[n] =
            std::exp((M_LN2 + la - n * ln24) / n) / (static_cast<double>(n) * n);
    }
    return rep;
}

double AsymptoticsReport::ratio_gap(int n) const {
    if (n < 1 || n + 1 > n_max)
        throw std::out_of_range("ratio_gap index outside the report");
    // r_{n+1}/r_n computed in logs upstream; the stored values are safe to
    // divide directly since both are O(1).
    return std::fabs(r[n + 1] / r[n] - 1.0);
}

std::string AsymptoticsReport::csv() const {
    std::ostringstream os;
    os << "n,r_n,rho_n\n";
    os.precision(17);
    for (int n = 1; n <= n_max; ++n)
        os << n << "," << r[n] << "," << rho[n] << "\n";
    return os.str();
}

DivergenceVerdict divergence_certificate(const Rational& radius, int n_max) {
    if (radius.sign() <= 0)
        throw std::invalid_argument("radius must be positive");
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    const mpz_class p = radius.num();
    const mpz_class q = radius.den();
    const mpz_class p2 = p * p;
    const mpz_class rq = 24 * q * q;

    // |c_n| R^{2n} > 1 with c_n = 2 a_n / 24^n and R = p/q is the integer
    // comparison 2 a_n p^{2n} > (24 q^2)^n. Every term of the a_n recursion
    // is positive, so a_n >= b_n where b_1 = 1 and b_n = 2(5n-4)(5n-6)
    // b_{n-1}, and 2 b_n p^{2n} > (24 q^2)^n already certifies the witness.
    // The bound stays within a few percent of a_n (the dropped convolution
    // is O(1/n^2) of the kept term) and avoids the quadratic-time sequence.
    mpz_class b = 1;
    mpz_class pow_p2 = 1, pow_rq = 1;
    for (int n = 1; n <= n_max; ++n) {
        if (n >= 2) {
            mpz_class f = 2 * (5L * n - 4);
            f *= 5L * n - 6;
            b *= f;
        }
        pow_p2 *= p2;
        pow_rq *= rq;
        mpz_class lhs = 2 * b * pow_p2;
        if (lhs > pow_rq) {
            std::ostringstream os;
            os << "2*b_" << n << "*" << p.get_str() << "^" << 2 * n << " > "
               << "(24*" << q.get_str() << "^2)^" << n
               << " with b_n = 2(5n-4)(5n-6)*b_{n-1} <= a_n termwise; b_" << n
               << " has " << mpz_sizeinbase(b.get_mpz_t(), 10) << " digits";
            return DivergenceVerdict{radius, n, os.str()};
        }
    }
    throw InsufficientDepth("no divergence witness for radius " + radius.str() +
                                " below n_max = " + std::to_string(n_max),
                            n_max);
}

std::string bfile(const ASequence& seq, int n_max) {
    std::ostringstream os;
    for (int n = 1; n <= n_max; ++n)
        os << n << " " << seq.a(n).get_str() << "\n";
    return os.str();
}

TruncatedSeries genus_expansion_series(int max_genus, int max_degree) {
    TruncatedSeries out({0, 2}, max_degree, max_genus);
    for (int g = 0; g <= max_genus; ++g)
        out += closed_form_ug(g).expand(max_degree);
    return out;
}

}  // namespace gdpoly
