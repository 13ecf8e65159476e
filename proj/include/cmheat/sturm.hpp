#pragma once

#include "cmheat/alpha_poly.hpp"

#include <vector>

namespace cmheat {

struct RootInterval {
    Rational lo, hi;
};

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<AlphaPoly> sturm_chain(const AlphaPoly& p);

/// Number of sign changes of the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<AlphaPoly>& chain, const Rational& x);

/// Number of distinct real roots in (lo, hi].
int count_roots(const std::vector<AlphaPoly>& chain, const Rational& lo, const Rational& hi);

/// Isolate every real root of p in [lo, hi] into disjoint intervals of width
/// <= width. The square-free part of p is used internally. Each returned
/// interval holds exactly one root and the square-free part changes sign
/// strictly between its endpoints. Throws std::invalid_argument if lo >= hi or
/// p is zero.
std::vector<RootInterval> sturm_isolate(const AlphaPoly& p, const Rational& lo, const Rational& hi,
                                        const Rational& width);

/// Cauchy bound: every real root r of p satisfies |r| < root_bound(p).
Rational root_bound(const AlphaPoly& p);

/// Distinct rational roots of p, ascending. A rational root of the primitive
/// integer form has a denominator dividing the leading coefficient L, so each
/// root is recovered from an isolating interval narrower than 1/|L|.
std::vector<Rational> rational_roots(const AlphaPoly& p);

}  // namespace cmheat
