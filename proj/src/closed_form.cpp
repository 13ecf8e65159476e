#include "cmheat/closed_form.hpp"

#include <stdexcept>

namespace cmheat {

namespace {

template <class K>
Quad<K> linear(const K& c0, const K& c1) {
    return {c0, c1, K()};
}

template <class K>
Quad<K> operator+(const Quad<K>& a, const Quad<K>& b) {
    return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2};
}

template <class K>
Quad<K> operator-(const Quad<K>& a, const Quad<K>& b) {
    return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2};
}

template <class K>
Quad<K> scale(const Quad<K>& a, const K& s) {
    return {a.q0 * s, a.q1 * s, a.q2 * s};
}

// Product of two linear quads.
template <class K>
Quad<K> mul(const Quad<K>& a, const Quad<K>& b) {
    if (!coeff_is_zero(a.q2) || !coeff_is_zero(b.q2)) throw std::logic_error("closed form: degree overflow");
    return {a.q0 * b.q0, a.q0 * b.q1 + a.q1 * b.q0, a.q1 * b.q1};
}

// q(c0 + s t) as a quadratic in t, s = +-1.
Quad<Rational> shifted(const Quad<Rational>& q, const Rational& c0, int s) {
    Rational sg(s);
    return {q.eval(c0), sg * (q.q1 + Rational(2) * q.q2 * c0), q.q2};
}

struct Region {  // {c : r0 + r1 c > 0}
    Rational r0, r1;
};

// Some c in the region with q(c) >= 0.
std::optional<Rational> nonneg_in_region(const Quad<Rational>& q, const Region& reg) {
    if (reg.r1.is_zero()) {
        if (reg.r0.sign() <= 0) return std::nullopt;
        if (q.q0.sign() >= 0) return Rational(0);
        if (auto t = nonneg_on_ray(q)) return *t;
        if (auto t = nonneg_on_ray({q.q0, -q.q1, q.q2})) return -*t;
        return std::nullopt;
    }
    Rational c0 = -reg.r0 / reg.r1;
    int s = reg.r1.sign();
    if (auto t = nonneg_on_ray(shifted(q, c0, s))) return c0 + Rational(s) * *t;
    return std::nullopt;
}

// Supremum of a concave q over the closure of the region (for reporting).
std::optional<Rational> closure_max(const Quad<Rational>& q, const Region& reg) {
    if (q.q2.sign() >= 0) return std::nullopt;
    Rational v = -q.q1 / (Rational(2) * q.q2);
    if (reg.r1.is_zero()) {
        if (reg.r0.sign() <= 0) return std::nullopt;
        return q.eval(v);
    }
    if ((reg.r0 + reg.r1 * v).sign() > 0) return q.eval(v);
    return q.eval(-reg.r0 / reg.r1);
}

Affine<Rational> at(const Affine<RatFunc>& f, const Rational& alpha) {
    return f.map<Rational>([&](const RatFunc& r) { return r.eval(alpha); });
}

template <class K>
void require_only(const Affine<K>& f, std::initializer_list<std::size_t> allowed, const char* what) {
    for (const auto& kv : f.terms()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || kv.first == a;
        if (!ok) throw std::invalid_argument(std::string("closed form: unexpected parameter in ") + what);
    }
}

template <class K>
SexticReduction<K> reduce(const Affine<K>& k1, const Affine<K>& k2, const Affine<K>& k3, const Affine<K>& k4,
                          const Affine<K>& k5, const Affine<K>& k6, std::size_t in, std::size_t out) {
    require_only(k1, {in, out}, "k1");
    require_only(k2, {in, out}, "k2");
    require_only(k3, {in}, "k3");
    require_only(k4, {in}, "k4");
    require_only(k5, {}, "k5");
    require_only(k6, {}, "k6");
    K c5 = k5.constant(), c6 = k6.constant();
    if (coeff_is_zero(c6)) throw std::domain_error("closed form: k6 vanishes");
    K four6 = K(Rational(4)) * c6;
    auto lin = [&](const Affine<K>& f) { return linear(f.constant(), f.coef(in)); };
    SexticReduction<K> r;
    r.beta = k2.coef(out) * K(Rational(1, 2));
    r.gamma = k1.coef(out);
    r.A = lin(k4) - Quad<K>{c5 * c5 / four6, K(), K()};
    r.B0 = scale(lin(k2), K(Rational(1, 2))) - scale(lin(k3), c5 / four6);
    Quad<K> k3l = lin(k3);
    r.C0 = lin(k1) - scale(mul(k3l, k3l), K(Rational(1)) / four6);
    if (!coeff_is_zero(r.beta)) {
        K ratio = r.gamma / r.beta;
        r.G = r.C0 - scale(r.B0, ratio) + scale(r.A, ratio * ratio * K(Rational(1, 4)));
    }
    return r;
}

std::pair<std::size_t, std::size_t> inner_outer(const SymbolicElimination& e, const Affine<RatFunc>& k3,
                                                const Affine<RatFunc>& k4) {
    if (e.free_params.size() != 2) throw std::invalid_argument("sextic family: need two free parameters");
    std::size_t a = e.free_params[0], b = e.free_params[1];
    auto uses = [](const Affine<RatFunc>& f, std::size_t i) { return !coeff_is_zero(f.coef(i)); };
    bool a_inner = uses(k3, a) || uses(k4, a), b_inner = uses(k3, b) || uses(k4, b);
    if (a_inner == b_inner) throw std::invalid_argument("sextic family: cannot separate parameters");
    return a_inner ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::optional<Rational> nonneg_on_ray(const Quad<Rational>& q) {
    const Rational one(1);
    if (q.q2.sign() > 0) return one + (q.q0.abs() + q.q1.abs()) / q.q2;
    if (q.q2.is_zero()) {
        if (q.q1.sign() > 0) return one + q.q0.abs() / q.q1;
        if (q.q1.sign() < 0) {
            if (q.q0.sign() > 0) return q.q0 / (-q.q1);
            return std::nullopt;
        }
        return q.q0.sign() >= 0 ? std::optional<Rational>(one) : std::nullopt;
    }
    Rational v = -q.q1 / (Rational(2) * q.q2);
    if (v.sign() > 0) {
        if (q.eval(v).sign() >= 0) return v;
        return std::nullopt;
    }
    if (q.q0.sign() <= 0) return std::nullopt;
    Rational t = one;
    while (q.eval(t).sign() < 0) t /= Rational(2);
    return t;
}

QuarticFamily quartic_family() { return quartic_family(eliminate_symbolic(assemble_normalized(2))); }

QuarticFamily quartic_family(const SymbolicElimination& e) {
    if (e.free_params.size() != 1) throw std::invalid_argument("quartic family: need one free parameter");
    const XiMonomial m1({4}), m2({2, 1}), m4({0, 2});
    for (const auto& kv : e.reduced.terms())
        if (!(kv.first == m1 || kv.first == m2 || kv.first == m4))
            throw std::invalid_argument("quartic family: unexpected monomial " + kv.first.str());
    QuarticFamily f;
    f.reg = e.reg;
    f.free = e.free_params[0];
    f.k1 = e.reduced.coeff(m1);
    f.k2 = e.reduced.coeff(m2);
    f.k4 = e.reduced.coeff(m4);
    return f;
}

QuarticOptimum quartic_optimum(const QuarticFamily& f) {
    if (!f.k4.is_constant()) throw std::invalid_argument("quartic optimum: k4 depends on the free parameter");
    const std::size_t c = f.free;
    RatFunc k4 = f.k4.constant();
    RatFunc a1 = f.k1.constant(), b1 = f.k1.coef(c), a2 = f.k2.constant(), b2 = f.k2.coef(c);
    RatFunc four(Rational(4)), two(Rational(2));
    RatFunc d0 = four * a1 * k4 - a2 * a2, d1 = four * b1 * k4 - two * a2 * b2, d2 = -(b2 * b2);
    if (d2.is_zero()) throw std::domain_error("quartic optimum: discriminant is not concave");
    RatFunc v = -d1 / (two * d2);
    return {v, d0 + v * (d1 + v * d2)};
}

ClosedFormVerdict closed_form_quartic(const QuarticFamily& f, const Rational& alpha) {
    const std::size_t c = f.free;
    const auto k1 = at(f.k1, alpha), k2 = at(f.k2, alpha), k4 = at(f.k4, alpha);
    const Rational a1 = k1.constant(), b1 = k1.coef(c), a2 = k2.constant(), b2 = k2.coef(c), a4 = k4.constant(),
                   b4 = k4.coef(c);
    const Rational four(4), two(2);
    Quad<Rational> D{four * a1 * a4 - a2 * a2, four * (a1 * b4 + b1 * a4) - two * a2 * b2, four * b1 * b4 - b2 * b2};
    Region reg{a4, b4};
    const std::string& name = f.reg->name(c);
    ClosedFormVerdict v;
    if (auto w = nonneg_in_region(D, reg)) {
        v.feasible = true;
        v.branch = "2a";
        v.params = {{name, *w}};
        v.value = D.eval(*w);
        return v;
    }
    // (2b): k2 = k4 = 0 and k1 >= 0.
    std::optional<Rational> w;
    if (!b4.is_zero()) w = -a4 / b4;
    else if (a4.is_zero()) w = !b2.is_zero() ? -a2 / b2 : b1.is_zero() ? Rational(0) : (a1.abs() + Rational(1)) / b1;
    if (w && (a2 + b2 * *w).is_zero() && (a4 + b4 * *w).is_zero() && (a1 + b1 * *w).sign() >= 0) {
        v.feasible = true;
        v.branch = "2b";
        v.params = {{name, *w}};
        v.value = a1 + b1 * *w;
        return v;
    }
    if (auto m = closure_max(D, reg)) v.value = *m;
    return v;
}

SexticFamily sextic_family() { return sextic_family(eliminate_symbolic(assemble_normalized(3))); }

SexticFamily sextic_family(const SymbolicElimination& e) {
    const XiMonomial m1({6}), m2({4, 1}), m3({3, 0, 1}), m4({2, 2}), m5({1, 1, 1}), m6({0, 0, 2});
    for (const auto& kv : e.reduced.terms()) {
        const auto& m = kv.first;
        if (!(m == m1 || m == m2 || m == m3 || m == m4 || m == m5 || m == m6))
            throw std::invalid_argument("sextic family: unexpected monomial " + m.str());
    }
    SexticFamily f;
    f.reg = e.reg;
    f.k1 = e.reduced.coeff(m1);
    f.k2 = e.reduced.coeff(m2);
    f.k3 = e.reduced.coeff(m3);
    f.k4 = e.reduced.coeff(m4);
    f.k5 = e.reduced.coeff(m5);
    f.k6 = e.reduced.coeff(m6);
    std::tie(f.inner, f.outer) = inner_outer(e, f.k3, f.k4);
    return f;
}

SexticReduction<RatFunc> sextic_reduction(const SexticFamily& f) {
    return reduce(f.k1, f.k2, f.k3, f.k4, f.k5, f.k6, f.inner, f.outer);
}

SexticReduction<Rational> sextic_reduction(const SexticFamily& f, const Rational& alpha) {
    return reduce(at(f.k1, alpha), at(f.k2, alpha), at(f.k3, alpha), at(f.k4, alpha), at(f.k5, alpha),
                  at(f.k6, alpha), f.inner, f.outer);
}

SexticBranches sextic_branches(const SexticFamily& f) {
    auto r = sextic_reduction(f);
    if (r.beta.is_zero() || r.G.q2.is_zero() || r.A.q1.is_zero())
        throw std::domain_error("sextic branches: degenerate family");
    SexticBranches b;
    b.concavity = r.G.q2;
    b.vertex_inner = -r.G.q1 / (RatFunc(Rational(2)) * r.G.q2);
    b.vertex_value = r.G.eval(b.vertex_inner);
    b.vertex_A = r.A.eval(b.vertex_inner);
    b.boundary_inner = -r.A.q0 / r.A.q1;
    b.boundary_outer = -r.B0.eval(b.boundary_inner) / r.beta;
    b.boundary_value = r.C0.eval(b.boundary_inner) + r.gamma * b.boundary_outer;
    return b;
}

ClosedFormVerdict closed_form_sextic(const SexticFamily& f, const Rational& alpha) {
    auto r = sextic_reduction(f, alpha);
    if (at(f.k6, alpha).constant().sign() < 0) return {};
    const std::string &in = f.reg->name(f.inner), &out = f.reg->name(f.outer);
    Region reg{r.A.q0, r.A.q1};
    ClosedFormVerdict v;
    if (r.beta.is_zero()) {
        // B no longer depends on the outer parameter; C does unless gamma = 0.
        if (r.gamma.is_zero()) throw std::domain_error("closed form sextic: degenerate family at alpha = " + alpha.str());
        auto w = nonneg_in_region({Rational(1), Rational(0), Rational(0)}, reg);
        if (!w) return v;
        Rational a = r.A.eval(*w), b = r.B0.eval(*w);
        v.feasible = true;
        v.branch = "2a";
        v.params = {{in, *w}, {out, (b * b / a - r.C0.eval(*w)) / r.gamma}};
        return v;
    }
    if (auto w = nonneg_in_region(r.G, reg)) {
        Rational a = r.A.eval(*w);
        v.feasible = true;
        v.branch = "2a";
        v.params = {{in, *w}, {out, (a * r.gamma / (Rational(2) * r.beta) - r.B0.eval(*w)) / r.beta}};
        v.value = r.G.eval(*w);
        return v;
    }
    // (2b): A = 0, B = 0, C >= 0.
    std::optional<Rational> w;
    if (!r.A.q1.is_zero()) w = -r.A.q0 / r.A.q1;
    else if (r.A.q0.is_zero()) w = nonneg_in_region(r.G, {Rational(1), Rational(0)});
    if (w) {
        Rational o = -r.B0.eval(*w) / r.beta;
        Rational c = r.C0.eval(*w) + r.gamma * o;
        if (c.sign() >= 0) {
            v.feasible = true;
            v.branch = "2b";
            v.params = {{in, *w}, {out, o}};
            v.value = c;
            return v;
        }
    }
    if (auto m = closure_max(r.G, reg)) v.value = *m;
    return v;
}

}  // namespace cmheat
