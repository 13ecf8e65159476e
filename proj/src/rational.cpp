#include "cmheat/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace cmheat {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
    return mpz_class(std::string(s), 10);
}

Rational parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        mpz_class ev = parse_integer(es);
        if (!ev.fits_slong_p()) throw std::invalid_argument("Rational::parse: exponent too large");
        exp10 = eneg ? -ev.get_si() : ev.get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("Rational::parse: lone '.'");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        digits = std::string(s);
    }
    mpz_class mant = parse_integer(digits);
    if (neg) mant = -mant;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? Rational(mant, p10) : Rational(mant * p10, 1);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational a = parse_decimal(text.substr(0, slash));
        Rational b = parse_decimal(text.substr(slash + 1));
        if (b.is_zero()) throw std::invalid_argument("Rational::parse: zero denominator");
        return a / b;
    }
    return parse_decimal(text);
}

Rational Rational::approximate(double x, const mpz_class& max_den) {
    if (!std::isfinite(x)) throw std::domain_error("Rational::approximate: non-finite input");
    // Exact value of the double, then continued fraction on it.
    mpq_class target(x);
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpq_class rem = target;
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) {
            // Best semiconvergent within the bound.
            mpz_class t = (max_den - k0) / k1;
            mpz_class hs = t * h1 + h0, ks = t * k1 + k0;
            Rational conv(h1, k1);
            if (ks > 0) {
                Rational semi(hs, ks);
                Rational tq(target);
                if ((semi - tq).abs() < (conv - tq).abs()) return semi;
            }
            return conv;
        }
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        mpq_class frac = rem - mpq_class(a);
        if (sgn(frac) == 0) return Rational(h1, k1);
        rem = 1 / frac;
    }
}

long double Rational::to_long_double() const {
    // Scale into double range, then divide in long double.
    mpf_class n(v_.get_num(), 128), d(v_.get_den(), 128);
    mpf_class q = n / d;
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, q.get_mpf_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

bool exact_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0) return false;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

}  // namespace cmheat
