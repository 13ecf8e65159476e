#pragma once

#include "cmheat/gram.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cmheat {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Smallest eigenvalue by cyclic Jacobi rotations, iterated until the
/// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F.
double lambda_min(const Eigen::MatrixXd& M);

/// M = L D L^T with L unit lower triangular and D >= 0, or a witness v with v^T M v < 0.
struct LdlResult {
    bool psd = false;
    RatMatrix L;
    std::vector<Rational> D;
    std::vector<Rational> witness;  // set when !psd
};

/// PSD-safe exact LDL^T: a zero pivot is accepted only if its whole remaining
/// column is zero; otherwise the 2x2 block [[0,s],[s,d]] yields the witness.
LdlResult exact_psd(const RatMatrix& M);

/// One square per positive pivot: weight D_k, poly sum_i L_ik basis_i.
std::vector<WeightedSquare> sos_from_ldl(const RatMatrix& L, const std::vector<Rational>& D,
                                         const std::vector<XiMonomial>& basis);

struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// M(p) = M0 + sum_i p_i A_i over the problem's parameters, in doubles.
struct NumericGram {
    std::vector<std::size_t> params;  // registry indices, same order as A
    Eigen::MatrixXd M0;
    std::vector<Eigen::MatrixXd> A;

    explicit NumericGram(const GramProblem<Rational>& g);
    Eigen::MatrixXd at(const std::vector<double>& p) const;
};

struct SearchOptions {
    int restarts = 32;
    std::uint64_t seed = 1;
    int threads = 1;
    double box = 1e4;           // |p_i| <= box
    double stop_above = 0.0;    // stop restarting once best exceeds this
};

struct SearchResult {
    std::vector<double> params;  // aligned with NumericGram::params
    double best = -1e300;        // lambda_min at params
    int restarts_used = 0;
};

/// Maximizes the concave function lambda_min(M(p)). Each restart runs a
/// log-barrier Newton path-following method on max t s.t. M(p) - tI > 0 from a
/// seeded random start (seed + restart index), so results do not depend on
/// scheduling. Throws ConstraintViolation if a residual constraint is nonzero.
SearchResult maximize_lambda_min(const GramProblem<Rational>& problem, const SearchOptions& opt = {});

}  // namespace cmheat
