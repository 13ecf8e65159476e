#pragma once

#include <json.hpp>

#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmheat {

struct Component {
    double w = 1.0, mu = 0.0, s = 1.0;  // weight, mean, variance
};

/// Gaussian mixture initial datum; under u_t = u_xx / 2 each component keeps its
/// shape with variance s + t.
struct Mixture {
    std::vector<Component> components;

    /// Throws std::invalid_argument unless weights > 0 sum to 1 and variances > 0.
    void validate() const;
    double max_variance() const;
    double min_variance() const;
};

/// "w:mu:s,w:mu:s,..."
Mixture parse_mixture(const std::string& text);

double density(const Mixture& m, double x, double t);
/// k-th x-derivative of the density (Hermite form).
double density_dx(const Mixture& m, double x, double t, int k);

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Simpson on [a, b] to relative tolerance rel (with a tiny absolute floor).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel = 1e-12,
                        int max_depth = 60);

/// [min mu - 12 sigma_max, max mu + 12 sigma_max] at time t.
std::pair<double, double> domain(const Mixture& m, double t);

double mass(const Mixture& m, double t);

/// Tsallis entropy (1 - int u^alpha)/(alpha - 1); Shannon -int u log u at alpha = 1.
double entropy(const Mixture& m, double alpha, double t);

enum class Sign { Positive, Negative, Inconclusive };
const char* sign_symbol(Sign s);

struct OrderEstimate {
    int n = 0;
    double value = 0.0;  // Richardson-extrapolated d^n H / dt^n
    double error = 0.0;  // |D(h/2) - D(h)| / 3
    Sign sign = Sign::Inconclusive;
};

struct SimReport {
    double alpha = 0.0, t0 = 0.0, h = 0.0;
    std::vector<OrderEstimate> orders;
};

constexpr int kMaxSimOrder = 5;

/// Central differences in t of the integrand u^alpha (or u log u) at every
/// quadrature node, in long double, for orders 1..n_max on stencils of step h
/// and h/2, then Richardson extrapolation. h <= 0 selects 0.01 t0. A sign is
/// reported only when |value| > 10 * error.
SimReport derivative_signs(const Mixture& m, double alpha, double t0, int n_max, double h = 0.0);

/// Weights of the second-order central difference for the k-th derivative on
/// offsets -p..p, p = (k + 1) / 2 (Fornberg).
std::vector<long double> central_weights(int k);

nlohmann::ordered_json to_json(const SimReport& r);

/// "t,H" rows for the given times.
void write_entropy_csv(std::ostream& os, const Mixture& m, double alpha, const std::vector<double>& times);

}  // namespace cmheat
