#pragma once

#include "cmheat/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cmheat {

/// Dense univariate polynomial in the entropy parameter alpha over Q.
/// coeffs()[k] multiplies alpha^k; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    AlphaPoly(long c) : AlphaPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    AlphaPoly(int c) : AlphaPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit AlphaPoly(std::vector<Rational> coeffs);
    AlphaPoly(std::initializer_list<Rational> coeffs) : AlphaPoly(std::vector<Rational>(coeffs)) {}

    /// The polynomial `alpha`.
    static AlphaPoly alpha() { return AlphaPoly({Rational(0), Rational(1)}); }
    /// alpha - r.
    static AlphaPoly linear(const Rational& r) { return AlphaPoly({-r, Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const;
    Rational constant() const { return coeff(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& a) const;
    double eval(double a) const;
    AlphaPoly derivative() const;
    AlphaPoly monic() const;

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly& operator*=(const AlphaPoly& o);
    AlphaPoly& operator*=(const Rational& s);

    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(AlphaPoly a, const AlphaPoly& b) { return a *= b; }
    friend AlphaPoly operator*(AlphaPoly a, const Rational& s) { return a *= s; }
    friend AlphaPoly operator*(const Rational& s, AlphaPoly a) { return a *= s; }
    AlphaPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

    /// Human-readable form in the variable `a`, e.g. "a^2-3*a+2".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Synthetic division by (alpha - r): p = (alpha - r) * quotient + remainder.
std::pair<AlphaPoly, Rational> div_linear(const AlphaPoly& p, const Rational& r);

/// Euclidean division; throws on a zero divisor.
std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& p, const AlphaPoly& d);

/// Monic gcd (zero only when both inputs are zero).
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

/// Integer-coefficient primitive representative with positive leading term.
AlphaPoly primitive_part(const AlphaPoly& p);

/// Field of rational functions num/den in alpha, normalized so that gcd(num,
/// den) = 1 and den is monic.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const AlphaPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(AlphaPoly num, AlphaPoly den);

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    AlphaPoly as_polynomial() const;  // throws unless is_polynomial()

    /// Value at alpha = a; throws std::domain_error when the denominator vanishes.
    Rational eval(const Rational& a) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void normalize();
    AlphaPoly num_, den_;
};

}  // namespace cmheat
