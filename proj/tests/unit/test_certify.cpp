#include "cmheat/certify.hpp"

#include <doctest.h>

using namespace cmheat;

TEST_SUITE("certify") {

TEST_CASE("order 2 certificate inside the interval") {
    Certificate c = certify(2, Rational(1, 2));
    REQUIRE(c.exact());
    CHECK(verify_certificate(c));
    CHECK(expand_squares(c.squares) == certified_polynomial(c));
    for (const auto& s : c.squares) CHECK(s.weight.sign() > 0);
    CHECK(c.sigma == sign_convention(2, Regime::AlphaBelow1));
}

TEST_CASE("no certificate beyond the order 2 boundary") {
    Certificate c = certify(2, Rational(4));
    CHECK_FALSE(c.exact());
    CHECK(c.status == CertStatus::HeuristicInfeasible);
    CHECK(c.best_lambda_min < 0);
    CHECK(c.squares.empty());
}

TEST_CASE("order 1 is feasible on both sides of 1") {
    CHECK(certify(1, Rational(1, 5)).exact());
    CHECK(certify(1, Rational(5)).exact());
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(certify(2, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(certify(2, Rational(1, 2), Regime::AlphaAbove1), std::invalid_argument);
}

TEST_CASE("tampering breaks verification") {
    Certificate c = certify(3, Rational(3, 2));
    REQUIRE(c.exact());
    Certificate bad = c;
    bad.squares[0].weight += Rational(1, 1000);
    CHECK_FALSE(verify_certificate(bad));
    bad = c;
    bad.params[0].second += Rational(1);
    CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("deterministic and JSON round trip") {
    CertifyOptions opt;
    opt.search.seed = 42;
    Certificate a = certify(3, Rational(2, 5), opt), b = certify(3, Rational(2, 5), opt);
    CHECK(a == b);
    auto j = nlohmann::ordered_json::parse(to_json(a).dump());
    Certificate back = certificate_from_json(j);
    CHECK(back == a);
    CHECK(to_json(back) == to_json(a));
    CHECK(j["alpha"] == "2/5");
}

}
