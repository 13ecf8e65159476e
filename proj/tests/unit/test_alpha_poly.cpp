#include "cmheat/alpha_poly.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace cmheat;

namespace {
AlphaPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng), 1 + (i % 3));
    if (c.back().is_zero()) c.back() = Rational(1);
    return AlphaPoly(c);
}
}  // namespace

TEST_SUITE("alpha_poly") {

TEST_CASE("evaluation and printing") {
    AlphaPoly p({Rational(2), Rational(-3), Rational(1)});  // a^2-3a+2
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(5, 2)) == Rational(3, 4));
    CHECK(p.eval(0.5) == doctest::Approx(0.75));
    CHECK(p.str() == "a^2-3*a+2");
    CHECK(p.derivative() == AlphaPoly({Rational(-3), Rational(2)}));
    CHECK(AlphaPoly().degree() == -1);
}

TEST_CASE("euclidean division identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        AlphaPoly p = random_poly(rng, 5), d = random_poly(rng, 2);
        auto [q, r] = divmod(p, d);
        CHECK(q * d + r == p);
        CHECK(r.degree() < d.degree());
    }
    CHECK_THROWS(divmod(AlphaPoly::alpha(), AlphaPoly()));
}

TEST_CASE("synthetic division matches evaluation") {
    AlphaPoly p({Rational(-10), Rational(29), Rational(-12), Rational(9)});
    auto [q, rem] = div_linear(p, Rational(2, 5));
    CHECK(rem == p.eval(Rational(2, 5)));
    CHECK(q * AlphaPoly::linear(Rational(2, 5)) + AlphaPoly(rem) == p);
}

TEST_CASE("gcd and primitive part") {
    AlphaPoly x1 = AlphaPoly::linear(Rational(1)), x2 = AlphaPoly::linear(Rational(2)),
              x3 = AlphaPoly::linear(Rational(3));
    CHECK(gcd(x1 * x2, x2 * x3) == x2);
    CHECK(gcd(x1 * Rational(4), x3) == AlphaPoly(Rational(1)));
    CHECK(primitive_part(AlphaPoly({Rational(-3, 4), Rational(1, 2)})) == AlphaPoly({Rational(-3), Rational(2)}));
}

TEST_CASE("rational functions are normalized") {
    AlphaPoly x = AlphaPoly::alpha();
    RatFunc f(x * x - AlphaPoly(Rational(1)), x - AlphaPoly(Rational(1)));
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == x + AlphaPoly(Rational(1)));
    RatFunc g(AlphaPoly(Rational(2)), x * Rational(4) - AlphaPoly(Rational(2)));  // 2/(4a-2) = (1/2)/(a-1/2)
    CHECK(g.den().leading() == Rational(1));
    CHECK(g.eval(Rational(1)) == Rational(1));
    CHECK_THROWS_AS(g.eval(Rational(1, 2)), std::domain_error);
    CHECK((g * RatFunc(x * Rational(2) - AlphaPoly(Rational(1)))) == RatFunc(Rational(1)));
    CHECK((f - f).is_zero());
}

}
