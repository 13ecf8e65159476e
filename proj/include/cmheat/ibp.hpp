#pragma once

#include "cmheat/xi_poly.hpp"

#include <string>
#include <vector>

namespace cmheat {

/// Exponent vector (p_1, p_2, ...) with sum i*p_i = target.
struct Partition {
    std::vector<int> p;  // p[i-1] = multiplicity of part i, trailing zeros trimmed
    int target = 0;

    XiMonomial monomial() const { return XiMonomial(p); }
    /// Number of parts, sum p_i.
    int parts() const;
    /// "(0,1,1)"
    std::string str() const;
};

/// All partitions of m, lexicographically ascending on (p_1, p_2, ..., p_m).
/// For m = 3: (0,0,1), (1,1,0), (3,0,0).
std::vector<Partition> enumerate_partitions(int m);

/// p(m) by the usual dynamic program; used as an independent count.
unsigned long long partition_count(int m);

struct Generator {
    Partition partition;  // partition of 2n-1
    XiPolyA poly;         // dx(prod xi_i^{p_i}, alpha)
};

/// One generator per partition of 2n-1, in enumerate_partitions order, so that
/// generators(n)[j-1] is T_j.
std::vector<Generator> generators(int n);

/// Weighted-degree m monomials in enumerate_partitions order.
std::vector<XiMonomial> weight_monomials(int m);

/// Weight-n monomials ordered lexicographically descending, e.g. n = 4:
/// [x1^4, x1^2*x2, x1*x3, x2^2, x4].
std::vector<XiMonomial> gram_basis(int n);

struct MonomialClasses {
    std::vector<XiMonomial> representable;  // products of two weight-n monomials
    std::vector<XiMonomial> must_vanish;
};

/// Split of the weight-2n monomials (enumerate_partitions order within each list).
MonomialClasses classify_monomials(int n);

}  // namespace cmheat
