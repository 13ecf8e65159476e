#include "cmheat/heatsim.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace cmheat;

namespace {
// Single Gaussian of variance v = s + t: int u^a = (2 pi v)^{(1-a)/2} / sqrt(a).
double falling(double b, int n) {
    double p = 1;
    for (int i = 0; i < n; ++i) p *= b - i;
    return p;
}

double tsallis_derivative(double alpha, double v, int n) {
    double beta = (1 - alpha) / 2, c = std::pow(2 * M_PI, beta) / std::sqrt(alpha);
    return -c * falling(beta, n) * std::pow(v, beta - n) / (alpha - 1);
}

// H = log(2 pi e v)/2
double shannon_derivative(double v, int n) {
    return 0.5 * std::pow(-1.0, n - 1) * std::tgamma(n) / std::pow(v, n);
}
}  // namespace

TEST_SUITE("heatsim") {

TEST_CASE("mixture parsing and validation") {
    Mixture m = parse_mixture("0.5:-2:0.5,0.5:2:1");
    REQUIRE(m.components.size() == 2);
    CHECK(m.components[0].mu == -2.0);
    CHECK(m.max_variance() == 1.0);
    CHECK_NOTHROW(m.validate());
    CHECK_THROWS(parse_mixture("0.5:1"));
    CHECK_THROWS(parse_mixture("x:1:1"));
    CHECK_THROWS(parse_mixture("0.4:0:1").validate());
    CHECK_THROWS(parse_mixture("1:0:-1").validate());
}

TEST_CASE("density derivatives") {
    Mixture m = parse_mixture("0.3:-1:0.5,0.7:1.5:2");
    const double t = 0.4, h = 1e-3;
    for (double x : {-2.0, 0.1, 1.7}) {
        for (int k = 1; k <= 3; ++k) {
            auto f = [&](double y) { return density_dx(m, y, t, k - 1); };
            double fd = (f(x + h) - f(x - h)) / (2 * h);
            CHECK(density_dx(m, x, t, k) == doctest::Approx(fd).epsilon(1e-5));
        }
        // heat equation u_t = u_xx / 2
        double ut = (density(m, x, t + h) - density(m, x, t - h)) / (2 * h);
        CHECK(ut == doctest::Approx(0.5 * density_dx(m, x, t, 2)).epsilon(1e-5));
    }
}

TEST_CASE("quadrature, mass and closed-form entropies") {
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0, M_PI) == doctest::Approx(2.0).epsilon(1e-12));
    Mixture g = parse_mixture("1:0:1");
    CHECK(std::abs(mass(g, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(entropy(g, 2.0, 0.0) - (1 - 1 / (2 * std::sqrt(M_PI)))) < 1e-9);
    CHECK(std::abs(entropy(g, 1.0, 1.0) - 0.5 * std::log(2 * M_PI * M_E * 2.0)) < 1e-9);
}

TEST_CASE("finite-difference weights") {
    auto w1 = central_weights(1);
    REQUIRE(w1.size() == 3);
    CHECK(static_cast<double>(w1[0]) == doctest::Approx(-0.5));
    CHECK(static_cast<double>(w1[2]) == doctest::Approx(0.5));
    for (int k = 1; k <= 5; ++k) {
        auto w = central_weights(k);
        int p = static_cast<int>(w.size() / 2);
        // moments: sum w_j j^m = k! [m == k] for m <= k
        for (int m = 0; m <= k; ++m) {
            long double s = 0;
            for (int j = -p; j <= p; ++j) s += w[static_cast<std::size_t>(j + p)] * std::pow((long double)j, m);
            CHECK(static_cast<double>(s) == doctest::Approx(m == k ? std::tgamma(k + 1) : 0.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("derivatives of a single Gaussian") {
    Mixture g = parse_mixture("1:0:1");
    for (double alpha : {0.5, 2.0}) {
        SimReport r = derivative_signs(g, alpha, 1.0, 4);
        for (const auto& o : r.orders) {
            double want = tsallis_derivative(alpha, 2.0, o.n);
            CHECK(o.value == doctest::Approx(want).epsilon(1e-6));
            CHECK(std::abs(o.value - want) <= 10 * o.error + 1e-9);
            CHECK(o.sign == (o.n % 2 ? Sign::Positive : Sign::Negative));
        }
    }
    SimReport s = derivative_signs(g, 1.0, 1.0, 3);
    for (const auto& o : s.orders) CHECK(o.value == doctest::Approx(shannon_derivative(2.0, o.n)).epsilon(1e-6));
}

TEST_CASE("bimodal sign pattern and reporting") {
    SimReport r = derivative_signs(parse_mixture("0.5:-2:0.5,0.5:2:1"), 1.5, 0.5, 5);
    REQUIRE(r.orders.size() == 5);
    std::string pattern;
    for (const auto& o : r.orders) {
        pattern += sign_symbol(o.sign);
        CHECK(std::abs(o.value) > 10 * o.error);
    }
    CHECK(pattern == "+-+-+");
    auto j = to_json(r);
    CHECK(j["orders"].size() == 5);
    std::ostringstream csv;
    write_entropy_csv(csv, parse_mixture("1:0:1"), 2.0, {0.0, 1.0});
    CHECK(csv.str().rfind("t,H\n", 0) == 0);
}

TEST_CASE("invalid simulation requests") {
    Mixture g = parse_mixture("1:0:1");
    CHECK_THROWS_AS(derivative_signs(g, 2.0, 0.01, 5, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(derivative_signs(g, 2.0, 1.0, 6), std::invalid_argument);
    CHECK_THROWS_AS(derivative_signs(g, -1.0, 1.0, 2), std::invalid_argument);
}

}
