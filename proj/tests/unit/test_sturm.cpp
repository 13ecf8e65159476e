#include "cmheat/sturm.hpp"

#include <doctest.h>

#include <cmath>

using namespace cmheat;

namespace {
// Newton in double precision, independent of the Sturm machinery.
double newton(double (*f)(double), double (*df)(double), double x) {
    for (int i = 0; i < 60; ++i) x -= f(x) / df(x);
    return x;
}
}  // namespace

TEST_SUITE("sturm") {

TEST_CASE("mixed rational and irrational roots") {
    AlphaPoly x = AlphaPoly::alpha();
    AlphaPoly p = (x - AlphaPoly(Rational(1, 3))) * (x - AlphaPoly(Rational(2))) * (x * x - AlphaPoly(Rational(2)));
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(1, 3), Rational(2)});
    auto chain = sturm_chain(p);
    CHECK(count_roots(chain, Rational(-10), Rational(10)) == 4);
    CHECK(count_roots(chain, Rational(0), Rational(1)) == 1);
    auto iv = sturm_isolate(p, Rational(-10), Rational(10), Rational(1, 1000000));
    REQUIRE(iv.size() == 4);
    int hits = 0;
    for (const auto& r : iv) {
        CHECK(r.hi - r.lo <= Rational(1, 1000000));
        if (r.lo.to_double() <= std::sqrt(2.0) && std::sqrt(2.0) <= r.hi.to_double()) ++hits;
        if (r.lo.to_double() <= -std::sqrt(2.0) && -std::sqrt(2.0) <= r.hi.to_double()) ++hits;
    }
    CHECK(hits == 2);
}

TEST_CASE("repeated roots count once") {
    AlphaPoly x = AlphaPoly::alpha();
    AlphaPoly p = (x - AlphaPoly(Rational(1))) * (x - AlphaPoly(Rational(1))) * (x + AlphaPoly(Rational(3)));
    CHECK(sturm_isolate(p, Rational(-5), Rational(5), Rational(1, 100)).size() == 2);
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(-3), Rational(1)});
}

TEST_CASE("cubic with a single real root") {
    AlphaPoly p({Rational(-10), Rational(29), Rational(-12), Rational(9)});
    double r = newton([](double a) { return 9 * a * a * a - 12 * a * a + 29 * a - 10; },
                      [](double a) { return 27 * a * a - 24 * a + 29; }, 0.5);
    auto iv = sturm_isolate(p, Rational(-10), Rational(10), Rational(1, 1000000000));
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].lo.to_double() <= r);
    CHECK(r <= iv[0].hi.to_double());
    CHECK(rational_roots(p).empty());
    CHECK(root_bound(p) > Rational(1));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(sturm_isolate(AlphaPoly(), Rational(0), Rational(1), Rational(1, 10)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_isolate(AlphaPoly::alpha(), Rational(1), Rational(0), Rational(1, 10)),
                    std::invalid_argument);
}

}
