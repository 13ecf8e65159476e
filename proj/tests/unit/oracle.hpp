#pragma once

// Smooth positive test functions with closed-form derivatives, shared by the
// numeric oracles of the unit tests.

#include <cmath>
#include <vector>

namespace oracle {

// u(x, t) = 2 + e^{-t} sin x + e^{-4t} cos(2x)/3 solves u_t = u_xx and stays >= 2/3.
inline double heat_u(double x, double t, int k = 0) {
    const double q = M_PI / 2 * k;
    double s = std::exp(-t) * std::sin(x + q) + std::exp(-4 * t) * std::pow(2.0, k) * std::cos(2 * x + q) / 3;
    return k == 0 ? 2 + s : s;
}

/// xi_i = u^{(i)}/u for i = 1..m.
inline std::vector<double> heat_xi(double x, double t, int m) {
    std::vector<double> xi;
    double u = heat_u(x, t);
    for (int i = 1; i <= m; ++i) xi.push_back(heat_u(x, t, i) / u);
    return xi;
}

template <class F>
double d1(F f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

template <class F>
double d2(F f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

template <class F>
double d3(F f, double x, double h) {
    return (-f(x + 3 * h) + 8 * f(x + 2 * h) - 13 * f(x + h) + 13 * f(x - h) - 8 * f(x - 2 * h) + f(x - 3 * h)) /
           (8 * h * h * h);
}

/// Trapezoid rule over one period; spectrally accurate for smooth periodic f.
template <class F>
double periodic_integral(F f, int n = 256) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += f(2 * M_PI * i / n);
    return s * 2 * M_PI / n;
}

}  // namespace oracle
