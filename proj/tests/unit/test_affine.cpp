#include "cmheat/affine.hpp"

#include <doctest.h>

using namespace cmheat;

TEST_SUITE("affine") {

TEST_CASE("linear arithmetic and products") {
    auto reg = std::make_shared<const ParamRegistry>(std::vector<std::string>{"c1", "c2"});
    AffineForm c1 = AffineForm::param(reg, "c1"), c2 = AffineForm::param(reg, "c2");
    AffineForm f = c1 * AlphaPoly::linear(Rational(3)) + c2 * AlphaPoly(Rational(2)) + AffineForm(AlphaPoly(Rational(1)));
    CHECK(f.coef(0) == AlphaPoly::linear(Rational(3)));
    CHECK(f.constant() == AlphaPoly(Rational(1)));
    CHECK(f.str() == "1+(a-3)*c1+2*c2");
    CHECK_THROWS_AS(c1 * c2, std::domain_error);
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(reg->index("c9"), std::invalid_argument);
}

TEST_CASE("substitution and evaluation") {
    auto reg = std::make_shared<const ParamRegistry>(std::vector<std::string>{"c1", "c2"});
    Affine<Rational> c1 = Affine<Rational>::param(reg, "c1"), c2 = Affine<Rational>::param(reg, "c2");
    Affine<Rational> f = c1 * Rational(2) + c2 * Rational(-1) + Affine<Rational>(Rational(5));
    Affine<Rational> rep = c2 * Rational(3);
    Affine<Rational> g = f.substitute([&](std::size_t i) { return i == 0 ? &rep : nullptr; });
    CHECK(g.coef(0).is_zero());
    CHECK(g.coef(1) == Rational(5));
    CHECK(f.evaluate({Rational(1), Rational(2)}) == Rational(5));
    CHECK(g.evaluate({Rational(0), Rational(2)}) == Rational(15));
}

TEST_CASE("registries do not mix") {
    auto r1 = std::make_shared<const ParamRegistry>(std::vector<std::string>{"c1"});
    auto r2 = std::make_shared<const ParamRegistry>(std::vector<std::string>{"c1"});
    CHECK_THROWS_AS(Affine<Rational>::param(r1, "c1") + Affine<Rational>::param(r2, "c1"), std::invalid_argument);
}

}
