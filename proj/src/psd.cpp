#include "cmheat/psd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace cmheat {

double lambda_min(const Eigen::MatrixXd& M) {
    const Eigen::Index n = M.rows();
    if (n == 0) return std::numeric_limits<double>::infinity();
    Eigen::MatrixXd a = 0.5 * (M + M.transpose());
    const double total = a.norm();
    if (total == 0.0) return 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
        if (std::sqrt(off) < 1e-12 * total) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    return a.diagonal().minCoeff();
}

LdlResult exact_psd(const RatMatrix& M) {
    const std::size_t N = M.size();
    LdlResult r;
    RatMatrix S = M;
    r.L.assign(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i) r.L[i][i] = Rational(1);
    r.D.assign(N, Rational(0));

    auto lift = [&](std::vector<Rational> y) {
        // Solve L^T v = y; columns >= the current step are still identity.
        std::vector<Rational> v(N);
        for (std::size_t i = N; i-- > 0;) {
            Rational acc = y[i];
            for (std::size_t j = i + 1; j < N; ++j) acc -= r.L[j][i] * v[j];
            v[i] = acc;
        }
        return v;
    };

    for (std::size_t k = 0; k < N; ++k) {
        const Rational d = S[k][k];
        if (d.sign() < 0) {
            std::vector<Rational> y(N);
            y[k] = Rational(1);
            r.witness = lift(std::move(y));
            return r;
        }
        if (d.is_zero()) {
            for (std::size_t j = k + 1; j < N; ++j) {
                if (S[j][k].is_zero()) continue;
                std::vector<Rational> y(N);
                y[k] = -(S[j][j] + Rational(1)) / (Rational(2) * S[j][k]);
                y[j] = Rational(1);
                r.witness = lift(std::move(y));
                return r;
            }
            continue;
        }
        r.D[k] = d;
        for (std::size_t i = k + 1; i < N; ++i) r.L[i][k] = S[i][k] / d;
        for (std::size_t i = k + 1; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) {
                S[i][j] -= r.L[i][k] * S[k][j];
                S[j][i] = S[i][j];
            }
    }
    r.psd = true;
    return r;
}

std::vector<WeightedSquare> sos_from_ldl(const RatMatrix& L, const std::vector<Rational>& D,
                                         const std::vector<XiMonomial>& basis) {
    std::vector<WeightedSquare> out;
    for (std::size_t k = 0; k < D.size(); ++k) {
        if (D[k].sign() <= 0) continue;
        WeightedSquare sq{D[k], {}};
        for (std::size_t i = k; i < basis.size(); ++i) sq.poly.add_term(basis[i], L[i][k]);
        out.push_back(std::move(sq));
    }
    return out;
}

NumericGram::NumericGram(const GramProblem<Rational>& g) : params(g.params) {
    const auto N = static_cast<Eigen::Index>(g.size());
    M0 = Eigen::MatrixXd::Zero(N, N);
    A.assign(params.size(), Eigen::MatrixXd::Zero(N, N));
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) {
            const auto& f = g.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            M0(i, j) = f.constant().to_double();
            for (std::size_t k = 0; k < params.size(); ++k) A[k](i, j) = f.coef(params[k]).to_double();
        }
}

Eigen::MatrixXd NumericGram::at(const std::vector<double>& p) const {
    Eigen::MatrixXd M = M0;
    for (std::size_t k = 0; k < A.size(); ++k) M += p[k] * A[k];
    return M;
}

namespace {

struct Barrier {
    const Eigen::MatrixXd& M0;
    const std::vector<Eigen::MatrixXd>& A;
    double R;

    // -tau*t - log det(M(p) - tI) - sum log(R^2 - p^2); +inf outside the domain.
    double value(const Eigen::VectorXd& x, double tau) const {
        const auto m = static_cast<Eigen::Index>(A.size());
        Eigen::MatrixXd S = M0;
        for (Eigen::Index k = 0; k < m; ++k) {
            if (std::abs(x(k)) >= R) return std::numeric_limits<double>::infinity();
            S += x(k) * A[static_cast<std::size_t>(k)];
        }
        S.diagonal().array() -= x(m);
        Eigen::LLT<Eigen::MatrixXd> llt(S);
        if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
        Eigen::MatrixXd Lm = llt.matrixL();
        double logdet = 2.0 * Lm.diagonal().array().log().sum();
        if (!std::isfinite(logdet)) return std::numeric_limits<double>::infinity();
        double box = 0.0;
        for (Eigen::Index k = 0; k < m; ++k) box += std::log(R * R - x(k) * x(k));
        return -tau * x(m) - logdet - box;
    }
};

// One restart of the path-following method on normalized data.
std::vector<double> barrier_run(const Eigen::MatrixXd& M0, const std::vector<Eigen::MatrixXd>& A, double R,
                                std::vector<double> p) {
    const auto m = static_cast<Eigen::Index>(A.size());
    const Eigen::Index N = M0.rows();
    Barrier bar{M0, A, R};
    Eigen::VectorXd x(m + 1);
    Eigen::MatrixXd S0 = M0;
    for (Eigen::Index k = 0; k < m; ++k) {
        x(k) = p[static_cast<std::size_t>(k)];
        S0 += x(k) * A[static_cast<std::size_t>(k)];
    }
    x(m) = lambda_min(S0) - 1.0;

    std::vector<Eigen::MatrixXd> G(static_cast<std::size_t>(m) + 1);
    double tau = 1.0;
    const double dim = static_cast<double>(N + 2 * m);
    for (int outer = 0; outer < 80; ++outer) {
        for (int it = 0; it < 100; ++it) {
            Eigen::MatrixXd S = M0;
            for (Eigen::Index k = 0; k < m; ++k) S += x(k) * A[static_cast<std::size_t>(k)];
            S.diagonal().array() -= x(m);
            Eigen::LLT<Eigen::MatrixXd> llt(S);
            if (llt.info() != Eigen::Success) break;
            Eigen::MatrixXd B = llt.solve(Eigen::MatrixXd::Identity(N, N));
            for (Eigen::Index k = 0; k < m; ++k) G[static_cast<std::size_t>(k)] = B * A[static_cast<std::size_t>(k)];
            G[static_cast<std::size_t>(m)] = -B;

            Eigen::VectorXd g(m + 1);
            Eigen::MatrixXd H(m + 1, m + 1);
            for (Eigen::Index a = 0; a <= m; ++a) {
                const auto& Ga = G[static_cast<std::size_t>(a)];
                g(a) = -Ga.trace();
                for (Eigen::Index b = a; b <= m; ++b) {
                    const auto& Gb = G[static_cast<std::size_t>(b)];
                    H(a, b) = H(b, a) = (Ga.array() * Gb.transpose().array()).sum();
                }
            }
            g(m) -= tau;
            for (Eigen::Index k = 0; k < m; ++k) {
                double u = R - x(k), v = R + x(k);
                g(k) += 1.0 / u - 1.0 / v;
                H(k, k) += 1.0 / (u * u) + 1.0 / (v * v);
            }
            Eigen::VectorXd dx = H.ldlt().solve(-g);
            double dec = -g.dot(dx);
            if (!std::isfinite(dec) || dec < 2e-12) break;
            double f0 = bar.value(x, tau), step = 1.0;
            bool moved = false;
            while (step > 1e-14) {
                Eigen::VectorXd xn = x + step * dx;
                double f1 = bar.value(xn, tau);
                if (f1 <= f0 - 0.25 * step * dec) {
                    x = xn;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        if (dim / tau < 1e-11) break;
        tau *= 10.0;
    }
    for (Eigen::Index k = 0; k < m; ++k) p[static_cast<std::size_t>(k)] = x(k);
    return p;
}

}  // namespace

SearchResult maximize_lambda_min(const GramProblem<Rational>& problem, const SearchOptions& opt) {
    for (const auto& c : problem.residual_constraints)
        if (!c.is_zero())
            throw ConstraintViolation("residual constraint " + c.str() + " does not vanish; no choice of parameters helps");

    NumericGram ng(problem);
    const std::size_t m = ng.params.size();
    SearchResult best;
    if (m == 0) {
        best.best = lambda_min(ng.M0);
        best.restarts_used = 1;
        return best;
    }

    double scale = ng.M0.cwiseAbs().maxCoeff();
    for (const auto& a : ng.A) scale = std::max(scale, a.cwiseAbs().maxCoeff());
    if (scale == 0.0) scale = 1.0;
    Eigen::MatrixXd M0 = ng.M0 / scale;
    std::vector<Eigen::MatrixXd> A;
    for (const auto& a : ng.A) A.push_back(a / scale);

    auto run = [&](int k) {
        std::mt19937_64 rng(opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k));
        std::normal_distribution<double> nd(0.0, 1.0);
        std::vector<double> p(m, 0.0);
        if (k > 0)
            for (auto& v : p) v = nd(rng);
        SearchResult r;
        r.params = barrier_run(M0, A, opt.box, std::move(p));
        r.best = lambda_min(ng.at(r.params));
        return r;
    };

    const int threads = std::max(1, opt.threads);
    int done = 0;
    while (done < opt.restarts) {
        int batch = std::min(threads, opt.restarts - done);
        std::vector<SearchResult> res(static_cast<std::size_t>(batch));
        if (batch == 1) res[0] = run(done);
        else {
            std::vector<std::thread> pool;
            for (int b = 0; b < batch; ++b) pool.emplace_back([&, b] { res[static_cast<std::size_t>(b)] = run(done + b); });
            for (auto& t : pool) t.join();
        }
        for (auto& r : res)
            if (r.best > best.best) best = std::move(r);
        done += batch;
        best.restarts_used = done;
        if (best.best > opt.stop_above) break;
    }
    return best;
}

}  // namespace cmheat
