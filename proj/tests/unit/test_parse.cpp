#include "cmheat/ibp.hpp"
#include "cmheat/parse.hpp"

#include <doctest.h>

using namespace cmheat;

TEST_SUITE("parse") {

TEST_CASE("expressions with parameters") {
    auto reg = std::make_shared<const ParamRegistry>(std::vector<std::string>{"c1", "c2", "c3"});
    XiPolyF p = parse_xipoly("(a-3)*c3*x1^4 + ((a-2)*c2+3*c3)*x1^2*x2 - 0.5*x4", reg);
    CHECK(p.size() == 3);
    CHECK(p.coeff(XiMonomial::var(4)) == AffineForm(AlphaPoly(Rational(-1, 2))));
    CHECK(p.coeff(XiMonomial::var(1, 4)).coef(2) == AlphaPoly::linear(Rational(3)));
    CHECK_THROWS_AS(parse_xipoly("c9*x1", reg), ParseError);
    CHECK_THROWS_AS(parse_xipoly("c1*c2*x1", reg), ParseError);
    CHECK_THROWS_AS(parse_xipoly_q("x1/x2"), ParseError);
    CHECK_THROWS_AS(parse_xipoly_q("a*x1"), ParseError);
    CHECK_THROWS_AS(parse_xipoly_q("x0"), ParseError);
    CHECK_THROWS_AS(parse_xipoly_q("(x1"), ParseError);
}

TEST_CASE("canonical text parses back to the same polynomial") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : generators(n)) CHECK(parse_xipoly_alpha(to_string(g.poly)) == g.poly);
}

TEST_CASE("surd squares") {
    WeightedSquare s = parse_surd_square("sqrt(2)*x1+sqrt(8)*x2");
    CHECK(s.weight == Rational(2));
    CHECK(s.poly == parse_xipoly_q("x1+2*x2"));
    WeightedSquare t = parse_surd_square("1/sqrt(10)*x1*x3-1/4*sqrt(5/2)*x2^2");
    // (x1 x3/sqrt10 - sqrt(5/2)/4 x2^2)^2 expanded by hand
    CHECK(expand_squares({t}) == parse_xipoly_q("1/10*x1^2*x3^2-1/4*x1*x2^2*x3+5/32*x2^4"));
    WeightedSquare r = parse_surd_square("x1-x2");
    CHECK(r.weight == Rational(1));
    CHECK_THROWS_AS(parse_surd_square("sqrt(2)*x1+sqrt(3)*x2"), ParseError);
    CHECK_THROWS_AS(parse_surd_square("sqrt(-2)*x1"), ParseError);
}

}
