#pragma once

#include "cmheat/alpha_poly.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmheat {

/// Ordered, append-only list of parameter names (c1, c2, ..., lam1, ...).
/// Affine forms refer to parameters by registry index; serialization follows
/// registry order.
class ParamRegistry {
public:
    ParamRegistry() = default;
    explicit ParamRegistry(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    /// Throws std::invalid_argument for names that were never declared.
    std::size_t index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const ParamRegistry>;

inline bool coeff_is_zero(const Rational& v) { return v.is_zero(); }
inline bool coeff_is_zero(const AlphaPoly& v) { return v.is_zero(); }
inline bool coeff_is_zero(const RatFunc& v) { return v.is_zero(); }

/// constant + sum_j coef_j * param_j with coefficients in K (Rational,
/// AlphaPoly or RatFunc). Products of two non-constant forms are rejected, so
/// a form can never become non-affine in its parameters.
template <class K>
class Affine {
public:
    Affine() = default;
    Affine(const K& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
    Affine(RegistryPtr reg, const K& c) : reg_(std::move(reg)), constant_(c) {}

    /// The form 1 * name.
    static Affine param(const RegistryPtr& reg, const std::string& name) {
        Affine f(reg, K());
        f.set_coef(reg->index(name), K(Rational(1)));
        return f;
    }
    static Affine param(const RegistryPtr& reg, std::size_t idx) {
        Affine f(reg, K());
        f.set_coef(idx, K(Rational(1)));
        return f;
    }

    const RegistryPtr& registry() const { return reg_; }
    const K& constant() const { return constant_; }
    const std::map<std::size_t, K>& terms() const { return terms_; }
    K coef(std::size_t idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? K() : it->second;
    }
    void set_coef(std::size_t idx, const K& v) {
        if (!reg_ || idx >= reg_->size()) throw std::out_of_range("Affine: parameter index out of registry");
        if (coeff_is_zero(v)) terms_.erase(idx);
        else terms_[idx] = v;
    }

    bool is_zero() const { return coeff_is_zero(constant_) && terms_.empty(); }
    bool is_constant() const { return terms_.empty(); }

    Affine& operator+=(const Affine& o) {
        adopt(o);
        constant_ += o.constant_;
        for (const auto& [i, v] : o.terms_) set_coef(i, coef(i) + v);
        return *this;
    }
    Affine& operator-=(const Affine& o) {
        adopt(o);
        constant_ -= o.constant_;
        for (const auto& [i, v] : o.terms_) set_coef(i, coef(i) - v);
        return *this;
    }
    Affine& operator*=(const K& s) {
        constant_ *= s;
        if (coeff_is_zero(s)) terms_.clear();
        else
            for (auto& kv : terms_) kv.second *= s;
        return *this;
    }
    friend Affine operator+(Affine a, const Affine& b) { return a += b; }
    friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
    friend Affine operator*(Affine a, const K& s) { return a *= s; }
    friend Affine operator*(const K& s, Affine a) { return a *= s; }
    Affine operator-() const { return *this * K(Rational(-1)); }

    /// Affine * Affine is allowed only when one side is constant.
    friend Affine operator*(const Affine& a, const Affine& b) {
        if (a.is_constant()) return b * a.constant_;
        if (b.is_constant()) return a * b.constant_;
        throw std::domain_error("Affine: product of two parameter-dependent forms is not affine");
    }

    friend bool operator==(const Affine& a, const Affine& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }

    /// Replace each parameter by a value; unspecified parameters stay symbolic.
    template <class Fn>
    Affine substitute(Fn&& value_of) const {
        Affine out(reg_, constant_);
        for (const auto& [i, v] : terms_) {
            const Affine* rep = value_of(i);
            if (rep) out += (*rep) * v;
            else out.set_coef(i, out.coef(i) + v);
        }
        return out;
    }

    /// Apply f to every coefficient (e.g. evaluate AlphaPoly at alpha).
    template <class K2, class Fn>
    Affine<K2> map(Fn&& f) const {
        Affine<K2> out(reg_, f(constant_));
        for (const auto& [i, v] : terms_) out.set_coef(i, f(v));
        return out;
    }

    /// Value once every parameter gets a K value.
    K evaluate(const std::vector<K>& values) const {
        K acc = constant_;
        for (const auto& [i, v] : terms_) acc += v * values.at(i);
        return acc;
    }

    std::string str() const;

private:
    void adopt(const Affine& o) {
        if (!reg_) reg_ = o.reg_;
        else if (o.reg_ && o.reg_ != reg_ && !o.terms_.empty())
            throw std::invalid_argument("Affine: mixing parameter registries");
    }

    RegistryPtr reg_;
    K constant_{};
    std::map<std::size_t, K> terms_;
};

template <class K>
bool coeff_is_zero(const Affine<K>& f) {
    return f.is_zero();
}

/// Affine forms over alpha-polynomials.
using AffineForm = Affine<AlphaPoly>;

inline std::string coeff_str(const Rational& v) { return v.str(); }
inline std::string coeff_str(const AlphaPoly& v) { return v.str(); }
inline std::string coeff_str(const RatFunc& v) { return v.str(); }

template <class K>
std::string Affine<K>::str() const {
    std::string out;
    auto wrap = [](const std::string& s) {
        bool simple = s.find_first_of("+-", 1) == std::string::npos;
        return simple ? s : "(" + s + ")";
    };
    if (!coeff_is_zero(constant_)) out = terms_.empty() ? coeff_str(constant_) : wrap(coeff_str(constant_));
    for (const auto& [i, v] : terms_) {
        std::string c = wrap(coeff_str(v));
        bool neg = c[0] == '-';
        if (neg) c.erase(0, 1);
        if (neg) out += "-";
        else if (!out.empty()) out += "+";
        out += (c == "1" ? "" : c + "*") + reg_->name(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace cmheat
