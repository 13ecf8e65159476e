#pragma once

#include "cmheat/affine.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmheat {

/// Monomial prod_i xi_i^{p_i}, xi_i = u^{(i)}/u. Stored densely: exps()[i-1]
/// is the exponent of xi_i, with trailing zeros trimmed.
class XiMonomial {
public:
    XiMonomial() = default;
    explicit XiMonomial(std::vector<int> exps);
    /// xi_index^power.
    static XiMonomial var(int index, int power = 1);

    const std::vector<int>& exps() const { return e_; }
    int exponent(int index) const {
        return index >= 1 && index <= static_cast<int>(e_.size()) ? e_[static_cast<std::size_t>(index - 1)] : 0;
    }
    int max_index() const { return static_cast<int>(e_.size()); }
    bool is_one() const { return e_.empty(); }
    /// sum_i i * p_i
    int weight() const;
    /// sum_i p_i
    int degree() const;

    XiMonomial operator*(const XiMonomial& o) const;
    /// Multiply by xi_index^delta (delta may be negative; result must stay valid).
    XiMonomial shifted(int index, int delta) const;

    /// Graded ordering: weight first, then exponent vector lexicographically.
    friend bool operator<(const XiMonomial& a, const XiMonomial& b);
    friend bool operator==(const XiMonomial& a, const XiMonomial& b) { return a.e_ == b.e_; }

    /// "x1^2*x3", or "1".
    std::string str() const;

private:
    std::vector<int> e_;
};

inline int weighted_degree(const XiMonomial& m) { return m.weight(); }

/// Polynomial in the xi variables with coefficients in C (Rational, AlphaPoly,
/// or an affine form). Zero coefficients are never stored.
template <class C>
class XiPoly {
public:
    using Terms = std::map<XiMonomial, C>;

    XiPoly() = default;
    XiPoly(const XiMonomial& m, const C& c) { add_term(m, c); }
    static XiPoly constant(const C& c) { return XiPoly(XiMonomial(), c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    C coeff(const XiMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }
    bool contains(const XiMonomial& m) const { return terms_.count(m) != 0; }

    void add_term(const XiMonomial& m, const C& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!coeff_is_zero(c)) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    /// Weight of every monomial if homogeneous, -1 if mixed, 0 for zero.
    int homogeneous_weight() const {
        int w = -2;
        for (const auto& kv : terms_) {
            int mw = kv.first.weight();
            if (w == -2) w = mw;
            else if (w != mw) return -1;
        }
        return w == -2 ? 0 : w;
    }
    int max_index() const {
        int m = 0;
        for (const auto& kv : terms_) m = std::max(m, kv.first.max_index());
        return m;
    }

    XiPoly& operator+=(const XiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    XiPoly& operator-=(const XiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
    friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
    XiPoly operator-() const {
        XiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    /// Multiply every coefficient by a scalar S (C * S must be defined).
    template <class S>
    XiPoly scaled(const S& s) const {
        XiPoly r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    friend XiPoly operator*(const XiPoly& a, const XiPoly& b) {
        XiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.terms_ == b.terms_; }

    /// Apply f to each coefficient, dropping terms that become zero.
    template <class C2, class Fn>
    XiPoly<C2> map(Fn&& f) const {
        XiPoly<C2> r;
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

private:
    Terms terms_;
};

using XiPolyA = XiPoly<AlphaPoly>;
using XiPolyQ = XiPoly<Rational>;
using XiPolyF = XiPoly<AffineForm>;

/// (1/u^w) d/dx (u^w p) where w = carrier (normally alpha), using
/// d/dx xi_i = xi_{i+1} - xi_1 xi_i and (1/u^w) d/dx u^w = w xi_1.
template <class C>
XiPoly<C> dx(const XiPoly<C>& p, const AlphaPoly& carrier);

/// (1/u^w) d/dt (u^w p) along u_t = u_xx, using d/dt xi_i = xi_{i+2} - xi_2 xi_i
/// and (1/u^w) d/dt u^w = w xi_2.
template <class C>
XiPoly<C> dt(const XiPoly<C>& p, const AlphaPoly& carrier);

namespace detail {
template <class C>
XiPoly<C> derive(const XiPoly<C>& p, const AlphaPoly& carrier, int step) {
    XiPoly<C> out;
    for (const auto& [m, c] : p.terms()) {
        // carrier * xi_step * m - deg(m) * xi_step * m
        AlphaPoly lead = carrier - AlphaPoly(Rational(m.degree()));
        out.add_term(m.shifted(step, 1), c * lead);
        for (int i = 1; i <= m.max_index(); ++i) {
            int pi = m.exponent(i);
            if (pi == 0) continue;
            out.add_term(m.shifted(i, -1).shifted(i + step, 1), c * AlphaPoly(Rational(pi)));
        }
    }
    return out;
}
}  // namespace detail

template <class C>
XiPoly<C> dx(const XiPoly<C>& p, const AlphaPoly& carrier) {
    return detail::derive(p, carrier, 1);
}

template <class C>
XiPoly<C> dt(const XiPoly<C>& p, const AlphaPoly& carrier) {
    return detail::derive(p, carrier, 2);
}

/// A scaled square w * p^2 with w > 0 rational and p over Q.
struct WeightedSquare {
    Rational weight;
    XiPolyQ poly;
};

/// sum_k w_k p_k^2, expanded exactly.
XiPolyQ expand_squares(const std::vector<WeightedSquare>& squares);

/// Specialize alpha in every coefficient.
XiPolyQ at_alpha(const XiPolyA& p, const Rational& a);
XiPoly<Affine<Rational>> at_alpha(const XiPolyF& p, const Rational& a);

/// Lift rational coefficients to constant alpha-polynomials.
XiPolyA lift(const XiPolyQ& p);

/// Numeric value at alpha = a and xi = (xi_1, xi_2, ...). Throws
/// std::out_of_range if p uses an index beyond xi.size().
double eval_at(const XiPolyA& p, const Rational& a, std::span<const double> xi);
double eval_at(const XiPolyQ& p, std::span<const double> xi);

/// Canonical text, highest monomial first: "(a-3)*x1^4+3*x1^2*x2".
std::string to_string(const XiPolyA& p);
std::string to_string(const XiPolyQ& p);
std::string to_string(const XiPolyF& p);
std::string to_string(const XiPoly<Affine<Rational>>& p);
std::string to_string(const XiPoly<Affine<RatFunc>>& p);

/// Pretty form using unicode subscripts, e.g. "(α-3)ξ₁⁴ + 3ξ₁²ξ₂".
std::string to_pretty(const XiPolyA& p);
std::string to_pretty(const XiPolyQ& p);

}  // namespace cmheat
