#pragma once

#include "cmheat/xi_poly.hpp"

namespace cmheat {

enum class Regime { AlphaAbove1, AlphaBelow1 };

/// Orders above this are refused unless the caller raises the cap.
inline constexpr int kDefaultMaxOrder = 8;

/// Regime of a given alpha; throws std::invalid_argument for alpha == 1 or alpha <= 0.
Regime regime_of(const Rational& alpha);
const char* regime_name(Regime r);

/// Sign s with s * (S0 + sum c_j T_j) >= 0 implying (-1)^{n+1} d^n H/dt^n >= 0.
/// Comes from (alpha-1) d^n H/dt^n = -alpha * int u^alpha S0 (rescaled time).
int sign_convention(int n, Regime regime);

struct DerivativeTarget {
    int order = 1;
    Regime regime = Regime::AlphaAbove1;
    int required_sign = 1;  // (-1)^{n+1}
    int sigma = 1;          // sign_convention(order, regime)

    static DerivativeTarget make(int n, Regime regime);
};

/// S0 with d^n/dt^n u^alpha = alpha u^alpha S0(xi) along u_t = u_xx, obtained by
/// n applications of dt to 1 followed by exact division by alpha.
/// Throws std::out_of_range unless 1 <= n <= max_order.
XiPolyA derive_S0(int n, int max_order = kDefaultMaxOrder);

/// Same polynomial from Faa di Bruno's formula: sum over b with sum j b_j = n of
/// n!/prod(b_j! (j!)^{b_j}) * (alpha-1)...(alpha-k+1) * prod xi_{2j}^{b_j}, k = sum b_j.
XiPolyA faadibruno_S0(int n, int max_order = kDefaultMaxOrder);

}  // namespace cmheat
