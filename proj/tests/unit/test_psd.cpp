#include "cmheat/psd.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <random>

using namespace cmheat;

namespace {
RatMatrix reconstruct(const LdlResult& r) {
    std::size_t n = r.D.size();
    RatMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m[i][j] += r.L[i][k] * r.D[k] * r.L[j][k];
    return m;
}

Rational quad(const RatMatrix& m, const std::vector<Rational>& v) {
    Rational s;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * m[i][j] * v[j];
    return s;
}
}  // namespace

TEST_SUITE("psd") {

TEST_CASE("Jacobi smallest eigenvalue matches a reference solver") {
    std::mt19937 rng(5);
    std::normal_distribution<double> d;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd a(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = d(rng);
        Eigen::MatrixXd m = a + a.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        CHECK(lambda_min(m) == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-10));
    }
}

TEST_CASE("exact LDL of a rank-deficient PSD matrix") {
    // A A^T with A 4x2
    const Rational a[4][2] = {{1, 2}, {Rational(1, 3), -1}, {0, 5}, {Rational(2, 7), Rational(1, 2)}};
    RatMatrix m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][0] * a[j][0] + a[i][1] * a[j][1];
    LdlResult r = exact_psd(m);
    REQUIRE(r.psd);
    CHECK(reconstruct(r) == m);
    int positive = 0;
    for (const auto& dk : r.D) {
        CHECK(dk.sign() >= 0);
        positive += dk.sign() > 0;
    }
    CHECK(positive == 2);
}

TEST_CASE("indefinite matrices produce a witness") {
    RatMatrix m = {{1, 2}, {2, 1}};
    LdlResult r = exact_psd(m);
    REQUIRE_FALSE(r.psd);
    CHECK(quad(m, r.witness).sign() < 0);
    RatMatrix z = {{0, 1}, {1, 1}};
    LdlResult rz = exact_psd(z);
    REQUIRE_FALSE(rz.psd);
    CHECK(quad(z, rz.witness).sign() < 0);
    RatMatrix ok = {{0, 0}, {0, 1}};
    CHECK(exact_psd(ok).psd);
}

TEST_CASE("squares from LDL reproduce the quadratic form") {
    RatMatrix m = {{2, 1}, {1, 2}};
    LdlResult r = exact_psd(m);
    REQUIRE(r.psd);
    std::vector<XiMonomial> basis = {XiMonomial::var(1), XiMonomial::var(2)};
    XiPolyQ want;
    want.add_term(XiMonomial::var(1, 2), Rational(2));
    want.add_term(XiMonomial::var(1) * XiMonomial::var(2), Rational(2));
    want.add_term(XiMonomial::var(2, 2), Rational(2));
    CHECK(expand_squares(sos_from_ldl(r.L, r.D, basis)) == want);
}

}
