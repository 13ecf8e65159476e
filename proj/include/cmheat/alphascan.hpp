#pragma once

#include "cmheat/certify.hpp"
#include "cmheat/sturm.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cmheat {

enum class EndpointKind { ExactValue, ExactRoot, NumericBoundary, Unbounded };

struct Endpoint {
    EndpointKind kind = EndpointKind::ExactValue;
    Rational value;        // ExactValue; NumericBoundary midpoint
    AlphaPoly poly;        // ExactRoot: defining polynomial
    RootInterval iso;      // ExactRoot: isolating interval
    double tol = 0.0;      // NumericBoundary: bracket width
    bool inclusive = false;

    double approx() const;
    std::string str() const;
};

struct AlphaInterval {
    Endpoint lo, hi;
    std::string str() const;
};

struct GridPoint {
    Rational alpha;
    CertStatus status = CertStatus::HeuristicInfeasible;
    double lambda_min = 0.0;
};

struct ScanReport {
    int n = 0;
    std::vector<GridPoint> grid;  // ascending alpha
    std::vector<AlphaInterval> intervals;
};

struct ScanOptions {
    CertifyOptions certify;
    int threads = 1;
    bool refine = true;               // bisect each interior boundary
    Rational refine_tol{1, 1000};
};

/// Grid lo, lo+step, ..., <= hi, skipping points within step/2 of 1.
std::vector<Rational> scan_grid(const Rational& lo, const Rational& hi, const Rational& step);

/// Certify on the grid, merge consecutive feasible points (never across 1) and
/// refine each boundary that has an infeasible grid neighbour. Points next to
/// a status change are re-run with four times the restarts.
ScanReport scan(int n, const Rational& lo, const Rational& hi, const Rational& step, const ScanOptions& opt = {});

struct SameStatus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Bisection {
    Rational feasible, infeasible;  // final bracket, statuses still differ
    double boundary = 0.0;          // midpoint
    int steps = 0;
};

/// Bisection on the certify outcome until |feasible - infeasible| <= tol, with
/// four times the configured restarts. Throws SameStatus when the two inputs
/// share a status.
Bisection bisect_boundary(int n, const Rational& feasible, const Rational& infeasible, const Rational& tol,
                          const CertifyOptions& opt = {});

/// Exact-certificate status at a single alpha (regime from alpha vs 1).
bool feasible_at(int n, const Rational& alpha, const CertifyOptions& opt = {});

/// Exact feasible set for n <= 3 from the closed-form criteria. Throws
/// std::invalid_argument for n >= 4.
std::vector<AlphaInterval> exact_endpoints(int n);

nlohmann::ordered_json to_json(const Endpoint& e);
nlohmann::ordered_json to_json(const AlphaInterval& iv);
nlohmann::ordered_json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const nlohmann::ordered_json& j);

}  // namespace cmheat
