#pragma once

#include "cmheat/flow.hpp"
#include "cmheat/psd.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmheat {

enum class CertStatus { ExactSOS, HeuristicInfeasible };

struct Certificate {
    int n = 0;
    Rational alpha;
    int sigma = 1;
    std::vector<std::pair<std::string, Rational>> params;  // registry order
    std::vector<WeightedSquare> squares;
    CertStatus status = CertStatus::HeuristicInfeasible;
    double best_lambda_min = 0.0;
    std::string note;

    bool exact() const { return status == CertStatus::ExactSOS; }
};

struct CertifyOptions {
    SearchOptions search;
    /// Round when lambda_min >= accept_rel * trace(M)/N ...
    double accept_rel = 1e-7;
    /// ... or when it is within near_zero * trace(M)/N of zero (interval endpoints
    /// where the optimum is exactly 0).
    double near_zero = 1e-6;
    std::vector<long> ladder{1000L, 1000000L, 1000000000L};
};

/// assemble -> eliminate (fixed alpha) -> build_gram -> maximize_lambda_min ->
/// continued-fraction rounding -> exact_psd. Requires alpha != 1 and a regime
/// consistent with alpha.
Certificate certify(int n, const Rational& alpha, Regime regime, const CertifyOptions& opt = {});
Certificate certify(int n, const Rational& alpha, const CertifyOptions& opt = {});

/// Exact check that sum w p^2 equals sigma (S0 + sum c_j T_j) at the recorded alpha
/// and parameters, with all weights positive. Meaningful only for ExactSOS.
bool verify_certificate(const Certificate& c);

/// sigma (S0 + sum c_j T_j) at the certificate's alpha and c values.
XiPolyQ certified_polynomial(const Certificate& c);

nlohmann::ordered_json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::ordered_json& j);
bool operator==(const Certificate& a, const Certificate& b);

/// Human-readable sum of squares.
std::string format_sos(const std::vector<WeightedSquare>& squares);

}  // namespace cmheat
