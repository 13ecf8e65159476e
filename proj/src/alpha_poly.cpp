#include "cmheat/alpha_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cmheat {

AlphaPoly::AlphaPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational AlphaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

Rational AlphaPoly::eval(const Rational& a) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

double AlphaPoly::eval(double a) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + it->to_double();
    return acc;
}

AlphaPoly AlphaPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return AlphaPoly(std::move(d));
}

AlphaPoly AlphaPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::string AlphaPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (mag != Rational(1)) os << mag.str() << "*";
        os << "a";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<AlphaPoly, Rational> div_linear(const AlphaPoly& p, const Rational& r) {
    const auto& c = p.coeffs();
    if (c.empty()) return {AlphaPoly(), Rational(0)};
    std::vector<Rational> q(c.size() - 1);
    Rational carry;
    for (std::size_t k = c.size(); k-- > 0;) {
        Rational v = c[k] + carry * r;
        if (k == 0) return {AlphaPoly(std::move(q)), v};
        q[k - 1] = v;
        carry = v;
    }
    return {AlphaPoly(std::move(q)), Rational(0)};  // unreachable
}

std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& p, const AlphaPoly& d) {
    if (d.is_zero()) throw std::domain_error("AlphaPoly: division by zero polynomial");
    AlphaPoly rem = p;
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, p.degree() - d.degree() + 1)));
    Rational lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rational f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        std::vector<Rational> t(static_cast<std::size_t>(shift) + 1);
        t.back() = f;
        rem -= AlphaPoly(std::move(t)) * d;
    }
    return {AlphaPoly(std::move(q)), rem};
}

AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly x = a, y = b;
    while (!y.is_zero()) {
        AlphaPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

AlphaPoly primitive_part(const AlphaPoly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class g = 0;
    std::vector<Rational> out;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(v, 1);
    }
    Rational scale(mpz_class(p.leading().sign() < 0 ? -1 : 1), g);
    for (auto& c : out) c *= scale;
    return AlphaPoly(std::move(out));
}

RatFunc::RatFunc(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = AlphaPoly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        AlphaPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Rational l = den_.leading();
    if (l != Rational(1)) {
        Rational inv = l.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

AlphaPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial: " + str());
    return num_;
}

Rational RatFunc::eval(const Rational& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero()) throw std::domain_error("RatFunc: pole at alpha = " + a.str());
    return num_.eval(a) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace cmheat
