#include "cmheat/alphascan.hpp"
#include "cmheat/closed_form.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

using namespace cmheat;

namespace {
// Order-2 family written out by hand: (a-3)c x1^4 + (a-2+3c) x1^2 x2 + 2 x2^2.
double quartic_disc(double a, double c) {
    double k1 = (a - 3) * c, k2 = a - 2 + 3 * c, k4 = 2;
    return 4 * k1 * k4 - k2 * k2;
}

// Order-3 family by hand, as a quadratic form in (x1^3, x1 x2, x3).
double sextic_lambda(double a, double c6, double c7) {
    double k1 = (a - 5) * c7, k2 = (a - 4) * c6 + 5 * c7, k3 = (a - 2) * (a - 3) + c6, k4 = (a - 2) * (a - 3) + 3 * c6,
           k5 = 8 * (a - 2), k6 = 4;
    Eigen::Matrix3d m;
    m << k1, k2 / 2, k3 / 2, k2 / 2, k4, k5 / 2, k3 / 2, k5 / 2, k6;
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

// Grid followed by a shrinking pattern search.
double best_sextic_lambda(double a) {
    double best = -1e300, b6 = 0, b7 = 0;
    for (double c6 = -10; c6 <= 10; c6 += 0.05)
        for (double c7 = -10; c7 <= 10; c7 += 0.05) {
            double v = sextic_lambda(a, c6, c7);
            if (v > best) best = v, b6 = c6, b7 = c7;
        }
    for (double h = 0.05; h > 1e-9; h /= 2)
        for (bool moved = true; moved;) {
            moved = false;
            for (auto [d6, d7] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}}) {
                double v = sextic_lambda(a, b6 + d6, b7 + d7);
                if (v > best) best = v, b6 += d6, b7 += d7, moved = true;
            }
        }
    return best;
}
}  // namespace

TEST_SUITE("closed_form") {

TEST_CASE("quartic optimum") {
    auto f = quartic_family();
    auto opt = quartic_optimum(f);
    AlphaPoly a = AlphaPoly::alpha();
    CHECK(opt.c_opt == RatFunc(a * Rational(1, 9) - AlphaPoly(Rational(2, 3))));
    CHECK(opt.max_disc == RatFunc(a * a * Rational(-8, 9) + a * Rational(8, 3)));
    CHECK(opt.c_opt.eval(Rational(1)) == Rational(-5, 9));
    for (double al : {0.5, 2.0, 2.9, 3.5}) {
        double best = -1e300;
        for (double c = -5; c <= 5; c += 1e-4) best = std::max(best, quartic_disc(al, c));
        CHECK(best == doctest::Approx(opt.max_disc.num().eval(al)).epsilon(1e-6));
    }
}

TEST_CASE("quartic verdicts") {
    auto f = quartic_family();
    CHECK(closed_form_quartic(f, Rational(1, 2)).feasible);
    CHECK(closed_form_quartic(f, Rational(3, 2)).feasible);
    auto at3 = closed_form_quartic(f, Rational(3));
    CHECK(at3.feasible);
    CHECK(at3.value == Rational(0));
    CHECK_FALSE(closed_form_quartic(f, Rational(16, 5)).feasible);
    CHECK_FALSE(closed_form_quartic(f, Rational(4)).feasible);
}

TEST_CASE("sextic branch formulas") {
    auto br = sextic_branches(sextic_family());
    AlphaPoly a = AlphaPoly::alpha();
    AlphaPoly cubic({Rational(-10), Rational(29), Rational(-12), Rational(9)});
    CHECK(br.boundary_value == RatFunc((a - AlphaPoly(Rational(2))) * cubic * Rational(-1, 180)));
    CHECK(br.concavity == RatFunc(Rational(-1, 16)));
    for (int i = 1; i <= 40; ++i) CHECK(br.vertex_A.eval(Rational(i, 10)).sign() < 0);
}

TEST_CASE("sextic verdicts agree with a numeric search") {
    auto f = sextic_family();
    for (double al : {0.5, 1.5}) {
        CHECK(closed_form_sextic(f, Rational::approximate(al, 10)).feasible);
        CHECK(best_sextic_lambda(al) > -1e-7);
    }
    for (double al : {0.1, 3.0}) {
        CHECK_FALSE(closed_form_sextic(f, Rational::approximate(al, 10)).feasible);
        CHECK(best_sextic_lambda(al) < -1e-3);
    }
    auto at2 = closed_form_sextic(f, Rational(2));
    CHECK(at2.feasible);
    CHECK(at2.branch == "2b");
    CHECK(closed_form_sextic(f, Rational(2, 5)).branch == "2a");
    CHECK_FALSE(closed_form_sextic(f, Rational(38, 100)).feasible);
    CHECK_FALSE(closed_form_sextic(f, Rational(21, 10)).feasible);
}

TEST_CASE("closed forms agree with exact certificates") {
    auto q = quartic_family();
    for (const Rational& a : {Rational(1, 2), Rational(5, 2), Rational(16, 5)})
        CHECK(closed_form_quartic(q, a).feasible == feasible_at(2, a));
    auto s = sextic_family();
    for (const Rational& a : {Rational(2, 5), Rational(3, 2), Rational(21, 10)})
        CHECK(closed_form_sextic(s, a).feasible == feasible_at(3, a));
}

}
