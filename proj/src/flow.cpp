#include "cmheat/flow.hpp"

#include <functional>
#include <stdexcept>

namespace cmheat {

namespace {
void check_order(int n, int max_order) {
    if (n < 1 || n > max_order)
        throw std::out_of_range("order n=" + std::to_string(n) + " outside [1, " + std::to_string(max_order) + "]");
}
}  // namespace

Regime regime_of(const Rational& alpha) {
    if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
    if (alpha == Rational(1)) throw std::invalid_argument("alpha = 1 is excluded (Shannon limit)");
    return alpha > Rational(1) ? Regime::AlphaAbove1 : Regime::AlphaBelow1;
}

const char* regime_name(Regime r) { return r == Regime::AlphaAbove1 ? "alpha>1" : "alpha<1"; }

int sign_convention(int n, Regime regime) {
    int even = n % 2 == 0 ? 1 : -1;  // (-1)^n
    return regime == Regime::AlphaAbove1 ? even : -even;
}

DerivativeTarget DerivativeTarget::make(int n, Regime regime) {
    DerivativeTarget t;
    t.order = n;
    t.regime = regime;
    t.required_sign = n % 2 == 1 ? 1 : -1;
    t.sigma = sign_convention(n, regime);
    return t;
}

XiPolyA derive_S0(int n, int max_order) {
    check_order(n, max_order);
    const AlphaPoly a = AlphaPoly::alpha();
    XiPolyA p = XiPolyA::constant(AlphaPoly(1));
    for (int k = 0; k < n; ++k) p = dt(p, a);
    return p.map<AlphaPoly>([](const AlphaPoly& c) {
        auto [q, rem] = div_linear(c, Rational(0));
        if (!rem.is_zero()) throw std::logic_error("derive_S0: coefficient not divisible by alpha");
        return q;
    });
}

XiPolyA faadibruno_S0(int n, int max_order) {
    check_order(n, max_order);
    std::vector<mpz_class> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

    XiPolyA out;
    std::vector<int> b(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == 0) {
            if (left != 0) return;
            mpz_class den = 1;
            int k = 0;
            std::vector<int> e(2 * static_cast<std::size_t>(n), 0);
            for (int i = 1; i <= n; ++i) {
                int bi = b[static_cast<std::size_t>(i)];
                if (!bi) continue;
                k += bi;
                mpz_class fi;
                mpz_pow_ui(fi.get_mpz_t(), fact[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<unsigned long>(bi));
                den *= fact[static_cast<std::size_t>(bi)] * fi;
                e[static_cast<std::size_t>(2 * i - 1)] = bi;
            }
            AlphaPoly ff(Rational(fact[static_cast<std::size_t>(n)], den));
            for (int m = 1; m < k; ++m) ff *= AlphaPoly::linear(Rational(m));
            out.add_term(XiMonomial(std::move(e)), ff);
            return;
        }
        for (int c = 0; c * j <= left; ++c) {
            b[static_cast<std::size_t>(j)] = c;
            rec(j - 1, left - c * j);
        }
        b[static_cast<std::size_t>(j)] = 0;
    };
    rec(n, n);
    return out;
}

}  // namespace cmheat
