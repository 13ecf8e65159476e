#pragma once

#include "cmheat/ibp.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmheat {

/// A family S(xi) affine in the parameters c1..cr (one per generator) and
/// lam1..lamK (Gram slacks, unused until build_gram).
struct Assembled {
    int n = 0;
    int sigma = 1;
    RegistryPtr reg;
    std::size_t num_c = 0;
    std::size_t num_lam = 0;
    XiPolyF poly;
};

/// Number of slack parameters of the order-n Gram matrix: sum over representable
/// monomials of (#unordered basis pairs with that product) - 1.
std::size_t slack_count(int n);

/// sigma * (S0 + sum_j c_j T_j).
Assembled assemble(int n, int sigma);

/// (-1)^n (S0 - T1)/(alpha-1) + sum_j c_j T_j. Equals (S0 + sum c'_j T_j) / ((-1)^n (alpha-1))
/// with c'_1 = -1 + (-1)^n (alpha-1) c_1 and c'_j = (-1)^n (alpha-1) c_j otherwise, and
/// d^n H/dt^n = (-1)^{n+1} alpha/2^n * int u^alpha F along u_t = u_xx/2. Nonnegativity of
/// F is therefore the target in both regimes.
Assembled assemble_normalized(int n);

/// Result of solving the must-vanish constraints for some of the c's.
template <class K>
struct Elimination {
    int n = 0;
    RegistryPtr reg;
    std::vector<std::size_t> pivots;       // registry indices solved for, ascending
    std::vector<std::size_t> free_params;  // c indices left free, ascending
    std::map<std::size_t, Affine<K>> solution;  // pivot -> affine form in the free c's
    XiPoly<Affine<K>> reduced;             // supported on representable monomials
    std::vector<XiMonomial> violated;      // must-vanish monomials whose constraint is inconsistent

    bool consistent() const { return violated.empty(); }
    std::vector<std::string> free_names() const;
};

using SymbolicElimination = Elimination<RatFunc>;
using FixedElimination = Elimination<Rational>;

/// Exact Gaussian elimination over rational functions of alpha. Columns are taken
/// in the order cr..c1; among candidate rows, a pivot with constant coefficient is
/// preferred.
SymbolicElimination eliminate_symbolic(const Assembled& a);

/// The same at a fixed alpha, over Q.
FixedElimination eliminate_fixed(const Assembled& a, const Rational& alpha);

/// Specialize a symbolic elimination at alpha. Throws std::domain_error at a pole.
FixedElimination at_alpha(const SymbolicElimination& e, const Rational& alpha);

template <class K>
struct GramProblem {
    int n = 0;
    RegistryPtr reg;
    std::vector<XiMonomial> basis;
    std::vector<std::vector<Affine<K>>> matrix;  // symmetric
    std::vector<Affine<K>> residual_constraints;  // must be identically zero
    std::vector<std::size_t> params;              // registry indices appearing in matrix

    std::size_t size() const { return basis.size(); }
};

/// Gram matrix over gram_basis(n). For each representable monomial the first
/// basis pair absorbs coeff - sum(lam), each further pair carries one lam; a
/// diagonal pair contributes its entry, an off-diagonal pair twice its entry.
template <class K>
GramProblem<K> build_gram(const Elimination<K>& e);

/// v^T M v as a xi-polynomial.
template <class K>
XiPoly<Affine<K>> expand_gram(const GramProblem<K>& g);

/// Rational matrix at specific parameter values (registry-indexed; missing -> 0).
std::vector<std::vector<Rational>> evaluate_gram(const GramProblem<Rational>& g,
                                                 const std::vector<Rational>& values);

/// Full parameter vector (registry-indexed) from values of the free c's and lams.
std::vector<Rational> complete_params(const FixedElimination& e, const std::vector<Rational>& values);

}  // namespace cmheat
