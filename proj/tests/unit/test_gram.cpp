#include "cmheat/gram.hpp"

#include <doctest.h>

#include <random>

using namespace cmheat;

namespace {
std::size_t brute_slacks(int n) {
    auto basis = gram_basis(n);
    std::map<XiMonomial, std::size_t> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) ++pairs[basis[i] * basis[j]];
    std::size_t s = 0;
    for (const auto& kv : pairs) s += kv.second - 1;
    return s;
}

XiPolyQ instantiate(const XiPolyF& p, const Rational& a, const std::vector<Rational>& values) {
    XiPolyQ out;
    auto fixed = at_alpha(p, a);
    for (const auto& [m, f] : fixed.terms()) out.add_term(m, f.evaluate(values));
    return out;
}
}  // namespace

TEST_SUITE("gram") {

TEST_CASE("slack counts") {
    for (int n = 1; n <= 5; ++n) CHECK(slack_count(n) == brute_slacks(n));
    CHECK(slack_count(2) == 0);
    CHECK(slack_count(4) > 0);
}

TEST_CASE("normalized family equals the rescaled raw family") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-20, 20);
    const Rational a(3, 2);
    for (int n = 2; n <= 4; ++n) {
        Assembled f = assemble_normalized(n), raw = assemble(n, 1);
        std::vector<Rational> c(f.reg->size()), craw(raw.reg->size());
        Rational s = Rational(n % 2 ? -1 : 1) * (a - Rational(1));
        for (std::size_t j = 0; j < f.num_c; ++j) {
            c[j] = Rational(d(rng), 7);
            craw[j] = s * c[j];
        }
        craw[0] -= Rational(1);
        XiPolyQ lhs = instantiate(f.poly, a, c);
        XiPolyQ rhs = instantiate(raw.poly, a, craw).scaled(s.inverse());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("elimination clears must-vanish monomials") {
    for (int n = 1; n <= 4; ++n) {
        auto e = eliminate_symbolic(assemble_normalized(n));
        CHECK(e.consistent());
        auto cls = classify_monomials(n);
        for (const auto& m : cls.must_vanish) CHECK_FALSE(e.reduced.contains(m));
        CHECK(e.pivots.size() + e.free_params.size() == generators(n).size());
    }
    auto e2 = eliminate_symbolic(assemble_normalized(2));
    CHECK(e2.free_names() == std::vector<std::string>{"c3"});
}

TEST_CASE("symbolic elimination specializes to the fixed one") {
    for (int n = 2; n <= 4; ++n) {
        Assembled f = assemble_normalized(n);
        for (const Rational& a : {Rational(1, 2), Rational(3, 2), Rational(9, 5)}) {
            auto fixed = eliminate_fixed(f, a);
            auto spec = at_alpha(eliminate_symbolic(f), a);
            CHECK(fixed.free_params == spec.free_params);
            CHECK(fixed.reduced == spec.reduced);
        }
    }
}

TEST_CASE("gram matrix expands back to the reduced family") {
    for (int n = 2; n <= 4; ++n) {
        auto e = eliminate_symbolic(assemble_normalized(n));
        auto g = build_gram(e);
        CHECK(g.size() == gram_basis(n).size());
        CHECK(expand_gram(g) == e.reduced);
        for (const auto& r : g.residual_constraints) CHECK(r.is_zero());
    }
    auto fe = eliminate_fixed(assemble_normalized(5), Rational(9, 5));
    auto g5 = build_gram(fe);
    CHECK(expand_gram(g5) == fe.reduced);
    for (std::size_t i = 0; i < g5.size(); ++i)
        for (std::size_t j = 0; j < g5.size(); ++j) CHECK(g5.matrix[i][j] == g5.matrix[j][i]);
}

TEST_CASE("completed parameters satisfy the pivots") {
    Assembled f = assemble_normalized(3);
    auto e = eliminate_fixed(f, Rational(3, 2));
    std::vector<Rational> v(f.reg->size());
    for (std::size_t i : e.free_params) v[i] = Rational(2, 3);
    auto full = complete_params(e, v);
    XiPolyQ p = instantiate(f.poly, Rational(3, 2), full);
    for (const auto& m : classify_monomials(3).must_vanish) CHECK_FALSE(p.contains(m));
}

}
