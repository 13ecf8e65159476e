#include "cmheat/alphascan.hpp"

#include <doctest.h>

using namespace cmheat;

namespace {
std::string joined(const std::vector<AlphaInterval>& v) {
    std::string s;
    for (const auto& iv : v) s += (s.empty() ? "" : " ") + iv.str();
    return s;
}
}  // namespace

TEST_SUITE("alphascan") {

TEST_CASE("grid skips alpha = 1") {
    auto g = scan_grid(Rational(1, 10), Rational(4), Rational(1, 10));
    CHECK(g.size() == 39);
    CHECK(g.front() == Rational(1, 10));
    CHECK(g.back() == Rational(4));
    for (const auto& a : g) CHECK(a != Rational(1));
    CHECK(scan_grid(Rational(-1), Rational(1, 2), Rational(1, 2)).size() == 1);
}

TEST_CASE("exact endpoints for orders 1 to 3") {
    CHECK(joined(exact_endpoints(1)) == "(0, 1) (1, inf)");
    CHECK(joined(exact_endpoints(2)) == "(0, 1) (1, 3]");
    auto iv = exact_endpoints(3);
    REQUIRE(iv.size() == 2);
    const Endpoint& lo = iv[0].lo;
    CHECK(lo.kind == EndpointKind::ExactRoot);
    CHECK(lo.iso.hi - lo.iso.lo <= Rational(1, 1000000000));
    CHECK(lo.iso.lo.to_double() <= 0.3892138);
    CHECK(0.3892137 <= lo.iso.hi.to_double());
    CHECK(lo.poly.eval(lo.iso.lo).sign() != lo.poly.eval(lo.iso.hi).sign());
    CHECK(iv[1].str() == "(1, 2]");
    CHECK_THROWS_AS(exact_endpoints(4), std::invalid_argument);
}

TEST_CASE("grid scan of order 2") {
    ScanReport r = scan(2, Rational(1, 10), Rational(4), Rational(1, 10));
    REQUIRE(r.intervals.size() == 2);
    const Endpoint& hi = r.intervals[1].hi;
    CHECK(hi.kind == EndpointKind::NumericBoundary);
    CHECK(std::abs(hi.approx() - 3.0) <= 1e-3);
    CHECK(r.intervals[0].hi.value == Rational(1));
    CHECK_FALSE(r.intervals[0].hi.inclusive);
    // JSON round trip
    auto j = nlohmann::ordered_json::parse(to_json(r).dump());
    CHECK(to_json(scan_report_from_json(j)) == to_json(r));
}

TEST_CASE("bisection") {
    Bisection b = bisect_boundary(2, Rational(29, 10), Rational(31, 10), Rational(1, 1000));
    CHECK(b.feasible <= Rational(3));
    CHECK(Rational(3) < b.infeasible);
    CHECK(b.infeasible - b.feasible <= Rational(1, 1000));
    CHECK(b.steps > 0);
    CHECK_THROWS_AS(bisect_boundary(2, Rational(3, 2), Rational(5, 2), Rational(1, 100)), SameStatus);
    CHECK_THROWS_AS(bisect_boundary(2, Rational(1, 2), Rational(4), Rational(1, 100)), std::invalid_argument);
}

}
