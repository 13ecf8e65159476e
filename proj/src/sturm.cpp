#include "cmheat/sturm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cmheat {

std::vector<AlphaPoly> sturm_chain(const AlphaPoly& p) {
    std::vector<AlphaPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        AlphaPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<AlphaPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int count_roots(const std::vector<AlphaPoly>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RootInterval> sturm_isolate(const AlphaPoly& p, const Rational& lo, const Rational& hi,
                                        const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_isolate: degenerate range, need lo < hi");
    if (width.sign() <= 0) throw std::invalid_argument("sturm_isolate: width must be positive");

    AlphaPoly g = gcd(p, p.derivative());
    AlphaPoly q = g.is_constant() ? p : divmod(p, g).first;
    std::vector<RootInterval> out;
    if (q.is_constant()) return out;
    auto chain = sturm_chain(q);

    // Interval of width <= width around an exact rational root r, holding no
    // other root and with non-zero endpoint values.
    auto around = [&](const Rational& r, const Rational& max_half) {
        Rational d = width / Rational(2);
        if (max_half < d) d = max_half;
        while (count_roots(chain, r - d, r + d) != 1 || q.eval(r - d).is_zero() || q.eval(r + d).is_zero())
            d /= Rational(2);
        return RootInterval{r - d, r + d};
    };

    std::function<void(const Rational&, const Rational&)> split = [&](const Rational& a, const Rational& b) {
        int cnt = count_roots(chain, a, b);
        if (cnt == 0) return;
        if (cnt == 1 && b - a <= width) {
            out.push_back({a, b});
            return;
        }
        Rational mid = (a + b) / Rational(2);
        if (q.eval(mid).is_zero()) {
            Rational room = (mid - a) < (b - mid) ? mid - a : b - mid;
            RootInterval iv = around(mid, room / Rational(2));
            split(a, iv.lo);
            out.push_back(iv);
            split(iv.hi, b);
        } else {
            split(a, mid);
            split(mid, b);
        }
    };

    Rational a = lo, b = hi;
    RootInterval left_iv, right_iv;
    bool left_root = q.eval(lo).is_zero(), right_root = q.eval(hi).is_zero();
    Rational span = (hi - lo) / Rational(4);
    if (left_root) {
        left_iv = around(lo, span);
        a = left_iv.hi;
        out.push_back(left_iv);
    }
    if (right_root) {
        right_iv = around(hi, span);
        b = right_iv.lo;
    }
    split(a, b);
    if (right_root) out.push_back(right_iv);
    return out;
}

Rational root_bound(const AlphaPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m;
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = (p.coeff(k) / p.leading()).abs();
        if (m < r) m = r;
    }
    return Rational(1) + m;
}

std::vector<Rational> rational_roots(const AlphaPoly& p) {
    std::vector<Rational> out;
    if (p.degree() < 1) return out;
    AlphaPoly q = primitive_part(p);
    if (q.constant().is_zero()) out.emplace_back(0);
    Rational lead = q.leading().abs();
    Rational bound = root_bound(q);
    auto ivs = sturm_isolate(q, -bound, bound, Rational(1) / (Rational(2) * lead));
    for (const auto& iv : ivs) {
        mpz_class L = lead.num();
        mpq_class lo = iv.lo.raw() * L, hi = iv.hi.raw() * L;
        mpz_class k0, k1;
        mpz_cdiv_q(k0.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(k1.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        for (mpz_class k = k0; k <= k1; ++k) {
            Rational r(k, L);
            if (!r.is_zero() && q.eval(r).is_zero()) out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cmheat
