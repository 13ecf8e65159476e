#include "cmheat/parse.hpp"
#include "cmheat/xi_poly.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace cmheat;

TEST_SUITE("xi_poly") {

TEST_CASE("monomial weight, degree and order") {
    XiMonomial m({2, 0, 1});
    CHECK(m.weight() == 5);
    CHECK(m.degree() == 3);
    CHECK(m.str() == "x1^2*x3");
    CHECK(XiMonomial::var(4) < m);
    CHECK(XiMonomial::var(1, 2) * XiMonomial::var(3) == m);
    CHECK(XiMonomial().str() == "1");
}

TEST_CASE("dx matches a finite-difference derivative") {
    const double alpha = 1.7;
    XiPolyA p = parse_xipoly_alpha("x1^2*x3-2*x2^2+(a-1)*x4+x1*x2");
    XiPolyA q = dx(p, AlphaPoly::alpha());
    for (double x : {0.3, 1.1, 2.9, 4.4}) {
        auto g = [&](double y) {
            auto xi = oracle::heat_xi(y, 0.0, 4);
            return std::pow(oracle::heat_u(y, 0.0), alpha) * eval_at(p, Rational(17, 10), xi);
        };
        double lhs = oracle::d1(g, x, 1e-3) / std::pow(oracle::heat_u(x, 0.0), alpha);
        auto xi = oracle::heat_xi(x, 0.0, 5);
        CHECK(eval_at(q, Rational(17, 10), xi) == doctest::Approx(lhs).epsilon(1e-7));
    }
}

TEST_CASE("dt matches the heat-flow time derivative") {
    const double alpha = 0.6;
    XiPolyA p = parse_xipoly_alpha("x1*x3+(a-2)*x2^2");
    XiPolyA q = dt(p, AlphaPoly::alpha());
    for (double x : {0.7, 2.2, 5.0}) {
        const double t = 0.2;
        auto g = [&](double s) {
            auto xi = oracle::heat_xi(x, s, 3);
            return std::pow(oracle::heat_u(x, s), alpha) * eval_at(p, Rational(3, 5), xi);
        };
        double lhs = oracle::d1(g, t, 1e-3) / std::pow(oracle::heat_u(x, t), alpha);
        CHECK(eval_at(q, Rational(3, 5), oracle::heat_xi(x, t, 5)) == doctest::Approx(lhs).epsilon(1e-7));
    }
}

TEST_CASE("expand_squares and specialization") {
    XiPolyQ p = parse_xipoly_q("x1^2-x2");
    XiPolyQ sq = expand_squares({{Rational(2), p}});
    CHECK(to_string(sq) == "2*x1^4-4*x1^2*x2+2*x2^2");
    XiPolyA a = parse_xipoly_alpha("(a-3)*x1^4+3*x1^2*x2");
    CHECK(to_string(a) == "(a-3)*x1^4+3*x1^2*x2");
    CHECK(at_alpha(a, Rational(3)) == parse_xipoly_q("3*x1^2*x2"));
    CHECK(lift(sq).homogeneous_weight() == 4);
    CHECK_THROWS_AS(eval_at(sq, std::vector<double>{1.0}), std::out_of_range);
}

}
