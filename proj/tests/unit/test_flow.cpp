#include "cmheat/flow.hpp"
#include "cmheat/parse.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace cmheat;

TEST_SUITE("flow") {

TEST_CASE("S0 equals the Faa di Bruno expansion") {
    const std::size_t sizes[] = {1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) {
        XiPolyA s = derive_S0(n);
        CHECK(s == faadibruno_S0(n));
        CHECK(s.size() == sizes[n - 1]);
        CHECK(s.homogeneous_weight() == 2 * n);
    }
    CHECK(derive_S0(1) == parse_xipoly_alpha("x2"));
    CHECK(derive_S0(2) == parse_xipoly_alpha("(a-1)*x2^2+x4"));
}

TEST_CASE("S0 against finite differences of u^alpha in time") {
    const double alpha = 1.3, x = 0.9, t = 0.25;
    const Rational a(13, 10);
    auto f = [&](double s) { return std::pow(oracle::heat_u(x, s), alpha); };
    double norm = alpha * f(t);
    auto xi = oracle::heat_xi(x, t, 6);
    CHECK(eval_at(derive_S0(1), a, xi) == doctest::Approx(oracle::d1(f, t, 1e-3) / norm).epsilon(1e-7));
    CHECK(eval_at(derive_S0(2), a, xi) == doctest::Approx(oracle::d2(f, t, 1e-3) / norm).epsilon(1e-5));
    CHECK(eval_at(derive_S0(3), a, xi) == doctest::Approx(oracle::d3(f, t, 1e-2) / norm).epsilon(1e-5));
}

TEST_CASE("order limits") {
    CHECK_THROWS_AS(derive_S0(0), std::out_of_range);
    CHECK_THROWS_AS(derive_S0(9), std::out_of_range);
    CHECK_NOTHROW(derive_S0(9, 9));
}

TEST_CASE("regimes and sign bookkeeping") {
    CHECK(regime_of(Rational(3, 2)) == Regime::AlphaAbove1);
    CHECK(regime_of(Rational(1, 2)) == Regime::AlphaBelow1);
    CHECK_THROWS_AS(regime_of(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(regime_of(Rational(0)), std::invalid_argument);
    // s * (S0 + sum c T) >= 0 must give (-1)^{n+1} d^n H >= 0, with
    // (a-1) d^n H = -a int u^a S0: s = (-1)^n sign(a-1).
    for (int n = 1; n <= 6; ++n) {
        int even = n % 2 ? -1 : 1;
        CHECK(sign_convention(n, Regime::AlphaAbove1) == even);
        CHECK(sign_convention(n, Regime::AlphaBelow1) == -even);
        auto tgt = DerivativeTarget::make(n, Regime::AlphaAbove1);
        CHECK(tgt.required_sign == -even);
    }
}

}
