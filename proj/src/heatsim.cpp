#include "cmheat/heatsim.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cmheat {

namespace {

constexpr long double kInvSqrt2Pi = 0.398942280401432677939946059934381868L;

// Probabilists' Hermite polynomial He_k(z).
long double hermite(int k, long double z) {
    long double h0 = 1.0L, h1 = z;
    if (k == 0) return h0;
    for (int j = 1; j < k; ++j) {
        long double h2 = z * h1 - static_cast<long double>(j) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

long double density_ld(const Mixture& m, long double x, long double t) {
    long double u = 0.0L;
    for (const auto& c : m.components) {
        long double v = c.s + t, z = (x - c.mu) / std::sqrt(v);
        u += c.w * kInvSqrt2Pi / std::sqrt(v) * std::exp(-0.5L * z * z);
    }
    return u;
}

long double integrand(long double u, double alpha) {
    if (u <= 0.0L) return 0.0L;
    if (alpha == 1.0) return u * std::log(u);
    return std::pow(u, static_cast<long double>(alpha));
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double eps, double whole, double fa,
                   double fm, double fb, int depth) {
    double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth <= 0) throw QuadratureError("adaptive_simpson: no convergence on [" + std::to_string(a) + ", " +
                                          std::to_string(b) + "]");
    return simpson_rec(f, a, m, eps / 2.0, left, fa, flm, fm, depth - 1) +
           simpson_rec(f, m, b, eps / 2.0, right, fm, frm, fb, depth - 1);
}

}  // namespace

void Mixture::validate() const {
    if (components.empty()) throw std::invalid_argument("mixture: no components");
    double sum = 0.0;
    for (const auto& c : components) {
        if (!(c.w > 0.0)) throw std::invalid_argument("mixture: weights must be positive");
        if (!(c.s > 0.0)) throw std::invalid_argument("mixture: variances must be positive");
        if (!std::isfinite(c.mu)) throw std::invalid_argument("mixture: non-finite mean");
        sum += c.w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("mixture: weights must sum to 1");
}

double Mixture::max_variance() const {
    double v = 0.0;
    for (const auto& c : components) v = std::max(v, c.s);
    return v;
}

double Mixture::min_variance() const {
    double v = HUGE_VAL;
    for (const auto& c : components) v = std::min(v, c.s);
    return v;
}

Mixture parse_mixture(const std::string& text) {
    Mixture m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::stringstream is(item);
        std::string w, mu, s;
        if (!std::getline(is, w, ':') || !std::getline(is, mu, ':') || !std::getline(is, s) || s.find(':') != std::string::npos)
            throw std::invalid_argument("mixture: expected w:mu:s, got '" + item + "'");
        try {
            std::size_t p1, p2, p3;
            Component c{std::stod(w, &p1), std::stod(mu, &p2), std::stod(s, &p3)};
            if (p1 != w.size() || p2 != mu.size() || p3 != s.size()) throw std::invalid_argument(item);
            m.components.push_back(c);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("mixture: bad number in '" + item + "'");
        }
    }
    m.validate();
    return m;
}

double density(const Mixture& m, double x, double t) { return static_cast<double>(density_ld(m, x, t)); }

double density_dx(const Mixture& m, double x, double t, int k) {
    long double acc = 0.0L;
    for (const auto& c : m.components) {
        long double v = c.s + t, sd = std::sqrt(v), z = (x - c.mu) / sd;
        long double g = c.w * kInvSqrt2Pi / sd * std::exp(-0.5L * z * z);
        long double f = ((k % 2) ? -1.0L : 1.0L) * hermite(k, z) / std::pow(sd, static_cast<long double>(k));
        acc += f * g;
    }
    return static_cast<double>(acc);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel, int max_depth) {
    constexpr int panels = 64;
    const double w = (b - a) / panels;
    std::vector<double> xs(2 * panels + 1), fs(2 * panels + 1);
    for (int i = 0; i <= 2 * panels; ++i) {
        xs[i] = a + 0.5 * w * i;
        fs[i] = f(xs[i]);
    }
    double coarse = 0.0;
    for (int i = 0; i < panels; ++i) coarse += w / 6.0 * (fs[2 * i] + 4.0 * fs[2 * i + 1] + fs[2 * i + 2]);
    double eps = std::max(rel * std::fabs(coarse), 1e-300) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double whole = w / 6.0 * (fs[2 * i] + 4.0 * fs[2 * i + 1] + fs[2 * i + 2]);
        total += simpson_rec(f, xs[2 * i], xs[2 * i + 2], eps, whole, fs[2 * i], fs[2 * i + 1], fs[2 * i + 2],
                             max_depth);
    }
    return total;
}

std::pair<double, double> domain(const Mixture& m, double t) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (const auto& c : m.components) {
        lo = std::min(lo, c.mu);
        hi = std::max(hi, c.mu);
    }
    double sig = std::sqrt(m.max_variance() + t);
    return {lo - 12.0 * sig, hi + 12.0 * sig};
}

double mass(const Mixture& m, double t) {
    auto [a, b] = domain(m, t);
    return adaptive_simpson([&](double x) { return density(m, x, t); }, a, b);
}

double entropy(const Mixture& m, double alpha, double t) {
    if (!(alpha > 0.0)) throw std::invalid_argument("entropy: alpha must be positive");
    if (t < 0.0) throw std::invalid_argument("entropy: t must be nonnegative");
    auto [a, b] = domain(m, t);
    double I = adaptive_simpson([&](double x) { return static_cast<double>(integrand(density_ld(m, x, t), alpha)); },
                                a, b);
    if (alpha == 1.0) return -I;
    return (1.0 - I) / (alpha - 1.0);
}

const char* sign_symbol(Sign s) {
    switch (s) {
        case Sign::Positive: return "+";
        case Sign::Negative: return "-";
        case Sign::Inconclusive: return "?";
    }
    return "?";
}

std::vector<long double> central_weights(int k) {
    if (k < 1) throw std::invalid_argument("central_weights: order must be >= 1");
    const int p = (k + 1) / 2, N = 2 * p + 1;
    std::vector<long double> x(N);
    for (int i = 0; i < N; ++i) x[i] = static_cast<long double>(i - p);
    // Fornberg's recursion at z = 0.
    std::vector<std::vector<long double>> c(N, std::vector<long double>(k + 1, 0.0L));
    long double c1 = 1.0L, c4 = x[0];
    c[0][0] = 1.0L;
    for (int i = 1; i < N; ++i) {
        int mn = std::min(i, k);
        long double c2 = 1.0L, c5 = c4;
        c4 = x[i];
        for (int j = 0; j < i; ++j) {
            long double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int m = mn; m >= 1; --m) c[i][m] = c1 * (m * c[i - 1][m - 1] - c5 * c[i - 1][m]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int m = mn; m >= 1; --m) c[j][m] = (c4 * c[j][m] - m * c[j][m - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<long double> w(N);
    for (int i = 0; i < N; ++i) w[i] = c[i][k];
    return w;
}

SimReport derivative_signs(const Mixture& m, double alpha, double t0, int n_max, double h) {
    m.validate();
    if (!(alpha > 0.0)) throw std::invalid_argument("derivative_signs: alpha must be positive");
    if (n_max < 1 || n_max > kMaxSimOrder)
        throw std::invalid_argument("derivative_signs: orders 1.." + std::to_string(kMaxSimOrder) + " only");
    if (h <= 0.0) h = 0.01 * t0;
    if (!(t0 - n_max * h > 0.0)) throw std::invalid_argument("derivative_signs: need t0 - n_max*h > 0");

    SimReport rep{alpha, t0, h, {}};
    // Trapezoid on a uniform grid fine enough for the narrowest component; the
    // integrands are analytic with Gaussian tails, so this converges geometrically.
    const int pmax = (n_max + 1) / 2;
    auto [a, b] = domain(m, t0 + pmax * h);
    const double dx = std::sqrt(m.min_variance() + t0 - pmax * h) / 32.0;
    const int nodes = static_cast<int>(std::ceil((b - a) / dx));
    const long double step = (b - a) / static_cast<long double>(nodes);

    std::vector<std::vector<long double>> weights;
    for (int k = 1; k <= n_max; ++k) weights.push_back(central_weights(k));
    std::vector<long double> sum_h(n_max, 0.0L), sum_h2(n_max, 0.0L);
    std::vector<long double> fh(2 * pmax + 1), fh2(2 * pmax + 1);
    for (int i = 0; i <= nodes; ++i) {
        long double x = a + step * i;
        long double tw = (i == 0 || i == nodes) ? 0.5L : 1.0L;
        for (int j = -pmax; j <= pmax; ++j) {
            fh[j + pmax] = integrand(density_ld(m, x, t0 + j * static_cast<long double>(h)), alpha);
            fh2[j + pmax] = integrand(density_ld(m, x, t0 + j * static_cast<long double>(h) / 2.0L), alpha);
        }
        for (int k = 1; k <= n_max; ++k) {
            const auto& w = weights[k - 1];
            int p = (k + 1) / 2;
            long double d1 = 0.0L, d2 = 0.0L;
            for (int j = -p; j <= p; ++j) {
                d1 += w[j + p] * fh[j + pmax];
                d2 += w[j + p] * fh2[j + pmax];
            }
            sum_h[k - 1] += tw * d1;
            sum_h2[k - 1] += tw * d2;
        }
    }
    // d^n H/dt^n = -(1/(alpha-1)) int d^n u^alpha, or -int d^n (u log u).
    const long double pre = alpha == 1.0 ? -1.0L : -1.0L / (alpha - 1.0);
    for (int k = 1; k <= n_max; ++k) {
        long double D1 = pre * step * sum_h[k - 1] / std::pow(static_cast<long double>(h), k);
        long double D2 = pre * step * sum_h2[k - 1] / std::pow(static_cast<long double>(h) / 2.0L, k);
        OrderEstimate e;
        e.n = k;
        e.value = static_cast<double>(D2 + (D2 - D1) / 3.0L);
        e.error = static_cast<double>(std::fabs(D2 - D1) / 3.0L);
        if (std::fabs(e.value) > 10.0 * e.error) e.sign = e.value > 0 ? Sign::Positive : Sign::Negative;
        rep.orders.push_back(e);
    }
    return rep;
}

nlohmann::ordered_json to_json(const SimReport& r) {
    nlohmann::ordered_json j;
    j["alpha"] = r.alpha;
    j["t0"] = r.t0;
    j["h"] = r.h;
    j["time_scale"] = "u_t = u_xx/2";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& o : r.orders)
        arr.push_back({{"n", o.n}, {"value", o.value}, {"error", o.error}, {"sign", sign_symbol(o.sign)}});
    j["orders"] = arr;
    return j;
}

void write_entropy_csv(std::ostream& os, const Mixture& m, double alpha, const std::vector<double>& times) {
    os << "t,H\n" << std::setprecision(17);
    for (double t : times) os << t << "," << entropy(m, alpha, t) << "\n";
}

}  // namespace cmheat
