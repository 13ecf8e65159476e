#pragma once

#include "cmheat/gram.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmheat {

/// q0 + q1 t + q2 t^2.
template <class K>
struct Quad {
    K q0{}, q1{}, q2{};
    K eval(const K& t) const { return q0 + t * (q1 + t * q2); }
};

/// Some t > 0 with q(t) >= 0, if any.
std::optional<Rational> nonneg_on_ray(const Quad<Rational>& q);

/// Order-2 reduced family k1 x1^4 + k2 x1^2 x2 + k4 x2^2 (k3 = k5 = 0 already
/// imposed), affine in one free parameter.
struct QuarticFamily {
    RegistryPtr reg;
    std::size_t free = 0;
    Affine<RatFunc> k1, k2, k4;
};

/// From eliminate_symbolic(assemble_normalized(2)).
QuarticFamily quartic_family();
QuarticFamily quartic_family(const SymbolicElimination& e);

/// Maximizer and maximum of 4 k1 k4 - k2^2 over the free parameter. Requires
/// k4 independent of it and a concave discriminant.
struct QuarticOptimum {
    RatFunc c_opt;
    RatFunc max_disc;
};
QuarticOptimum quartic_optimum(const QuarticFamily& f);

struct ClosedFormVerdict {
    bool feasible = false;
    std::string branch;  // "2a" or "2b" when feasible
    std::vector<std::pair<std::string, Rational>> params;  // witness values of the free parameters
    /// Best value of the deciding quantity (discriminant, or the Schur quantity G).
    Rational value;
};

/// Conditions (1), (2a), (2b) of the quartic criterion at a fixed alpha.
ClosedFormVerdict closed_form_quartic(const QuarticFamily& f, const Rational& alpha);

/// Order-3 reduced family k1 x1^6 + k2 x1^4 x2 + k3 x1^3 x3 + k4 x1^2 x2^2
/// + k5 x1 x2 x3 + k6 x3^2, i.e. the quadratic form in (x1^3, x1 x2, x3).
/// `inner` enters k2, k3, k4 (and possibly k1); `outer` only k1 and k2; k5, k6
/// are parameter-free with k6 > 0.
struct SexticFamily {
    RegistryPtr reg;
    std::size_t inner = 0, outer = 0;
    Affine<RatFunc> k1, k2, k3, k4, k5, k6;
};

SexticFamily sextic_family();
SexticFamily sextic_family(const SymbolicElimination& e);

/// With A = k4 - k5^2/(4k6), B = k2/2 - k3 k5/(4k6), C = k1 - k3^2/(4k6) the form
/// is PSD iff [[C,B],[B,A]] is. B = B0 + beta*outer, C = C0 + gamma*outer, and for
/// A > 0 the best outer gives A * G(inner) with
/// G = C0 - (gamma/beta) B0 + A gamma^2/(4 beta^2), a quadratic in inner.
template <class K>
struct SexticReduction {
    Quad<K> A, B0, C0, G;  // in the inner parameter
    K beta{}, gamma{};
};
SexticReduction<RatFunc> sextic_reduction(const SexticFamily& f);
SexticReduction<Rational> sextic_reduction(const SexticFamily& f, const Rational& alpha);

/// Branch quantities as functions of alpha (generic alpha).
struct SexticBranches {
    RatFunc vertex_inner;     // argmax of G
    RatFunc vertex_value;     // G at the vertex
    RatFunc vertex_A;         // A at the vertex; the vertex is usable where this is > 0
    RatFunc boundary_inner;   // A = 0
    RatFunc boundary_outer;   // B = 0 there
    RatFunc boundary_value;   // C there (branch 2b); equals G at the boundary
    RatFunc concavity;        // leading coefficient of G
};
SexticBranches sextic_branches(const SexticFamily& f);

/// Conditions (1), (2a), (2b) of the sextic criterion at a fixed alpha,
/// maximizing over both free parameters exactly.
ClosedFormVerdict closed_form_sextic(const SexticFamily& f, const Rational& alpha);

}  // namespace cmheat
