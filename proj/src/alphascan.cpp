#include "cmheat/alphascan.hpp"

#include "cmheat/closed_form.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace cmheat {

namespace {

CertifyOptions boosted(const CertifyOptions& opt) {
    CertifyOptions b = opt;
    b.search.restarts *= 4;
    return b;
}

bool same_side_of_one(const Rational& a, const Rational& b) {
    return ((a - Rational(1)) * (b - Rational(1))).sign() > 0;
}

std::string fmt(double v, int prec = 9) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

const char* kind_name(EndpointKind k) {
    switch (k) {
        case EndpointKind::ExactValue: return "ExactValue";
        case EndpointKind::ExactRoot: return "ExactRoot";
        case EndpointKind::NumericBoundary: return "NumericBoundary";
        case EndpointKind::Unbounded: return "Unbounded";
    }
    return "?";
}

EndpointKind kind_from(const std::string& s) {
    if (s == "ExactValue") return EndpointKind::ExactValue;
    if (s == "ExactRoot") return EndpointKind::ExactRoot;
    if (s == "NumericBoundary") return EndpointKind::NumericBoundary;
    if (s == "Unbounded") return EndpointKind::Unbounded;
    throw std::invalid_argument("unknown endpoint kind: " + s);
}

Endpoint exact_value(const Rational& v, bool inclusive) {
    Endpoint e;
    e.kind = EndpointKind::ExactValue;
    e.value = v;
    e.inclusive = inclusive;
    return e;
}

Endpoint endpoint_from_json(const nlohmann::ordered_json& j) {
    Endpoint e;
    e.kind = kind_from(j.at("kind").get<std::string>());
    e.inclusive = j.at("inclusive").get<bool>();
    if (j.contains("value")) e.value = Rational::parse(j.at("value").get<std::string>());
    if (j.contains("tol")) e.tol = j.at("tol").get<double>();
    if (j.contains("poly")) {
        std::vector<Rational> c;
        for (const auto& s : j.at("poly")) c.push_back(Rational::parse(s.get<std::string>()));
        e.poly = AlphaPoly(std::move(c));
        e.iso = {Rational::parse(j.at("iso").at(0).get<std::string>()),
                 Rational::parse(j.at("iso").at(1).get<std::string>())};
    }
    return e;
}

// ---- exact endpoints -------------------------------------------------------

struct Candidate {
    AlphaPoly poly;
    bool closed;  // the deciding quantity is attained (>= 0 suffices) at its roots
};

void add_ratfunc(std::vector<Candidate>& out, const RatFunc& f, bool closed) {
    if (!f.num().is_constant()) out.push_back({f.num(), closed});
    if (!f.den().is_constant()) out.push_back({f.den(), false});
}

struct Breakpoint {
    bool exact = true;
    Rational value;
    AlphaPoly poly;  // irrational root: defining polynomial (rational roots stripped)
    RootInterval iso;
    bool inclusive = false;

    Rational left() const { return exact ? value : iso.lo; }
    Rational right() const { return exact ? value : iso.hi; }
};

AlphaPoly strip_rational_roots(AlphaPoly p) {
    for (const auto& r : rational_roots(p))
        while (p.degree() > 0) {
            auto [q, rem] = div_linear(p, r);
            if (!rem.is_zero()) break;
            p = q;
        }
    return primitive_part(p);
}

int sign_on(const RatFunc& f, const RootInterval& iv) {
    int a = f.eval(iv.lo).sign(), b = f.eval(iv.hi).sign();
    return a == b ? a : 0;
}

}  // namespace

double Endpoint::approx() const {
    switch (kind) {
        case EndpointKind::ExactRoot: return ((iso.lo + iso.hi) / Rational(2)).to_double();
        case EndpointKind::Unbounded: return HUGE_VAL;
        default: return value.to_double();
    }
}

std::string Endpoint::str() const {
    switch (kind) {
        case EndpointKind::ExactValue: return value.str();
        case EndpointKind::ExactRoot:
            return "root(" + poly.str() + ") in [" + fmt(iso.lo.to_double(), 12) + ", " + fmt(iso.hi.to_double(), 12) +
                   "]";
        case EndpointKind::NumericBoundary: return "~" + fmt(value.to_double(), 6) + " (+-" + fmt(tol / 2, 2) + ")";
        case EndpointKind::Unbounded: return "inf";
    }
    return "?";
}

std::string AlphaInterval::str() const {
    return std::string(lo.inclusive ? "[" : "(") + lo.str() + ", " + hi.str() + (hi.inclusive ? "]" : ")");
}

std::vector<Rational> scan_grid(const Rational& lo, const Rational& hi, const Rational& step) {
    if (step.sign() <= 0) throw std::invalid_argument("scan: step must be positive");
    if (hi < lo) throw std::invalid_argument("scan: hi < lo");
    std::vector<Rational> g;
    const Rational half = step / Rational(2);
    for (Rational a = lo; a <= hi; a += step) {
        if ((a - Rational(1)).abs() < half) continue;
        if (a.sign() <= 0) continue;
        g.push_back(a);
    }
    return g;
}

bool feasible_at(int n, const Rational& alpha, const CertifyOptions& opt) { return certify(n, alpha, opt).exact(); }

Bisection bisect_boundary(int n, const Rational& feasible, const Rational& infeasible, const Rational& tol,
                          const CertifyOptions& opt) {
    if (tol.sign() <= 0) throw std::invalid_argument("bisect_boundary: tol must be positive");
    if (!same_side_of_one(feasible, infeasible))
        throw std::invalid_argument("bisect_boundary: bracket must not contain alpha = 1");
    const CertifyOptions b = boosted(opt);
    bool f = feasible_at(n, feasible, b), i = feasible_at(n, infeasible, b);
    if (f == i)
        throw SameStatus("bisect_boundary: both ends " + std::string(f ? "feasible" : "without certificate") +
                         " (" + feasible.str() + ", " + infeasible.str() + ")");
    if (!f) throw std::invalid_argument("bisect_boundary: arguments swapped, " + feasible.str() + " has no certificate");
    Bisection r{feasible, infeasible, 0.0, 0};
    while ((r.feasible - r.infeasible).abs() > tol) {
        Rational m = (r.feasible + r.infeasible) / Rational(2);
        if (feasible_at(n, m, b)) r.feasible = m;
        else r.infeasible = m;
        ++r.steps;
    }
    r.boundary = ((r.feasible + r.infeasible) / Rational(2)).to_double();
    return r;
}

ScanReport scan(int n, const Rational& lo, const Rational& hi, const Rational& step, const ScanOptions& opt) {
    ScanReport rep;
    rep.n = n;
    const auto alphas = scan_grid(lo, hi, step);
    rep.grid.resize(alphas.size());

    CertifyOptions copt = opt.certify;
    copt.search.threads = 1;
    auto run = [&](std::size_t i, const CertifyOptions& o) {
        Certificate c = certify(n, alphas[i], o);
        rep.grid[i] = {alphas[i], c.status, c.best_lambda_min};
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < alphas.size();) run(i, copt);
    };
    int nt = std::max(1, std::min<int>(opt.threads, static_cast<int>(alphas.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    auto feas = [&](std::size_t i) { return rep.grid[i].status == CertStatus::ExactSOS; };
    auto linked = [&](std::size_t i, std::size_t j) { return same_side_of_one(alphas[i], alphas[j]); };
    // Second look at infeasible points next to a status change.
    const CertifyOptions strong = boosted(copt);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (feas(i)) continue;
        bool edge = (i > 0 && linked(i, i - 1) && feas(i - 1)) || (i + 1 < alphas.size() && linked(i, i + 1) && feas(i + 1));
        if (edge) run(i, strong);
    }

    for (std::size_t i = 0; i < alphas.size();) {
        if (!feas(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < alphas.size() && feas(j + 1) && linked(j, j + 1)) ++j;
        auto boundary = [&](std::size_t in, std::optional<std::size_t> out) {
            if (!out) return exact_value(alphas[in], true);
            if (!linked(in, *out)) return exact_value(Rational(1), false);
            Endpoint e;
            e.kind = EndpointKind::NumericBoundary;
            if (opt.refine) {
                Bisection b = bisect_boundary(n, alphas[in], alphas[*out], opt.refine_tol, copt);
                e.value = (b.feasible + b.infeasible) / Rational(2);
                e.tol = (b.feasible - b.infeasible).abs().to_double();
            } else {
                e.value = (alphas[in] + alphas[*out]) / Rational(2);
                e.tol = step.to_double();
            }
            return e;
        };
        AlphaInterval iv;
        iv.lo = boundary(i, i > 0 ? std::optional<std::size_t>(i - 1) : std::nullopt);
        iv.hi = boundary(j, j + 1 < alphas.size() ? std::optional<std::size_t>(j + 1) : std::nullopt);
        rep.intervals.push_back(iv);
        i = j + 1;
    }
    return rep;
}

std::vector<AlphaInterval> exact_endpoints(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("exact_endpoints: supported for n = 1, 2, 3 only");

    std::vector<Candidate> cands;
    std::function<bool(const Rational&)> feasible;
    std::function<bool(const Breakpoint&)> closed_at;  // irrational breakpoints
    std::optional<RatFunc> vertex_A;

    if (n == 1) {
        auto e = eliminate_symbolic(assemble_normalized(1));
        if (e.reduced.size() != 1 || !(e.reduced.terms().begin()->first == XiMonomial({2})))
            throw std::logic_error("exact_endpoints: unexpected order-1 family");
        RatFunc k = e.reduced.terms().begin()->second.constant();
        add_ratfunc(cands, k, true);
        feasible = [k](const Rational& a) { return k.eval(a).sign() >= 0; };
    } else if (n == 2) {
        auto fam = quartic_family();
        auto opt = quartic_optimum(fam);
        add_ratfunc(cands, opt.max_disc, true);
        add_ratfunc(cands, fam.k4.constant(), false);
        feasible = [fam](const Rational& a) { return closed_form_quartic(fam, a).feasible; };
    } else {
        auto fam = sextic_family();
        auto br = sextic_branches(fam);
        add_ratfunc(cands, br.boundary_value, true);
        add_ratfunc(cands, br.vertex_value, true);
        add_ratfunc(cands, br.vertex_A, false);
        add_ratfunc(cands, br.concavity, false);
        vertex_A = br.vertex_A;
        feasible = [fam](const Rational& a) { return closed_form_sextic(fam, a).feasible; };
    }

    // Breakpoints: 0, 1 and every root in (0, inf) of a candidate.
    Rational bound(2);
    for (const auto& c : cands) bound = std::max(bound, root_bound(c.poly) + Rational(1));
    std::vector<Breakpoint> bps;
    bps.push_back({true, Rational(0), {}, {}, false});
    bps.push_back({true, Rational(1), {}, {}, false});
    std::vector<AlphaPoly> irr;
    for (const auto& c : cands) {
        for (const auto& r : rational_roots(c.poly))
            if (r.sign() > 0) bps.push_back({true, r, {}, {}, false});
        AlphaPoly q = strip_rational_roots(c.poly);
        if (q.degree() > 0) irr.push_back(q);
    }
    std::sort(bps.begin(), bps.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.value < b.value; });
    bps.erase(std::unique(bps.begin(), bps.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.value == b.value; }),
              bps.end());

    const Rational width(1, 1000000000);
    for (std::size_t k = 0; k < irr.size(); ++k) {
        for (const auto& iv : sturm_isolate(irr[k], Rational(0), bound, width)) {
            if (iv.hi.sign() <= 0) continue;
            bool dup = false;
            for (const auto& b : bps)
                if (!b.exact && !(b.iso.hi < iv.lo || iv.hi < b.iso.lo) &&
                    count_roots(sturm_chain(gcd(b.poly, irr[k])), iv.lo, iv.hi) > 0)
                    dup = true;
            if (dup) continue;
            Breakpoint b{false, {}, irr[k], iv, false};
            bps.push_back(b);
        }
    }
    std::sort(bps.begin(), bps.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.left() < b.left(); });

    // Status of each breakpoint.
    for (auto& b : bps) {
        if (b.exact) {
            b.inclusive = b.value.sign() > 0 && b.value != Rational(1) && feasible(b.value);
            continue;
        }
        b.inclusive = false;
        for (const auto& c : cands) {
            if (!c.closed) continue;
            AlphaPoly g = gcd(c.poly, b.poly);
            if (g.is_constant() || count_roots(sturm_chain(g), b.iso.lo, b.iso.hi) == 0) continue;
            bool usable = true;
            if (vertex_A && c.poly == vertex_A->num()) usable = sign_on(*vertex_A, b.iso) > 0;
            b.inclusive = b.inclusive || usable;
        }
    }

    // Status of each open segment between consecutive breakpoints, last one unbounded.
    std::vector<bool> seg(bps.size());
    for (std::size_t k = 0; k < bps.size(); ++k) {
        Rational probe = k + 1 < bps.size() ? (bps[k].right() + bps[k + 1].left()) / Rational(2)
                                            : bps[k].right() + Rational(1);
        seg[k] = feasible(probe);
    }

    auto endpoint_of = [](const Breakpoint& b) {
        Endpoint e;
        if (b.exact) {
            e.kind = EndpointKind::ExactValue;
            e.value = b.value;
        } else {
            e.kind = EndpointKind::ExactRoot;
            e.poly = b.poly;
            e.iso = b.iso;
        }
        e.inclusive = b.inclusive;
        return e;
    };

    std::vector<AlphaInterval> out;
    for (std::size_t k = 0; k < bps.size();) {
        if (!seg[k]) {
            ++k;
            continue;
        }
        AlphaInterval iv;
        iv.lo = endpoint_of(bps[k]);
        std::size_t j = k;
        while (j + 1 < bps.size() && bps[j + 1].inclusive && seg[j + 1]) ++j;
        if (j + 1 < bps.size()) iv.hi = endpoint_of(bps[j + 1]);
        else {
            iv.hi.kind = EndpointKind::Unbounded;
            iv.hi.inclusive = false;
        }
        out.push_back(iv);
        k = j + 1;
    }
    return out;
}

nlohmann::ordered_json to_json(const Endpoint& e) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(e.kind);
    j["inclusive"] = e.inclusive;
    switch (e.kind) {
        case EndpointKind::ExactValue: j["value"] = e.value.str(); break;
        case EndpointKind::ExactRoot: {
            auto poly = nlohmann::ordered_json::array();
            for (const auto& c : e.poly.coeffs()) poly.push_back(c.str());
            j["poly"] = poly;
            j["poly_text"] = e.poly.str();
            j["iso"] = {e.iso.lo.str(), e.iso.hi.str()};
            break;
        }
        case EndpointKind::NumericBoundary:
            j["value"] = e.value.str();
            j["tol"] = e.tol;
            break;
        case EndpointKind::Unbounded: break;
    }
    if (e.kind != EndpointKind::Unbounded) j["approx"] = e.approx();
    return j;
}

nlohmann::ordered_json to_json(const AlphaInterval& iv) {
    return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"text", iv.str()}};
}

nlohmann::ordered_json to_json(const ScanReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    auto grid = nlohmann::ordered_json::array();
    for (const auto& g : r.grid)
        grid.push_back({{"alpha", g.alpha.str()},
                        {"status", g.status == CertStatus::ExactSOS ? "ExactSOS" : "HeuristicInfeasible"},
                        {"lambda_min", g.lambda_min}});
    j["grid"] = grid;
    auto ivs = nlohmann::ordered_json::array();
    for (const auto& iv : r.intervals) ivs.push_back(to_json(iv));
    j["intervals"] = ivs;
    return j;
}

ScanReport scan_report_from_json(const nlohmann::ordered_json& j) {
    ScanReport r;
    r.n = j.at("n").get<int>();
    for (const auto& g : j.at("grid")) {
        GridPoint p;
        p.alpha = Rational::parse(g.at("alpha").get<std::string>());
        p.status = g.at("status").get<std::string>() == "ExactSOS" ? CertStatus::ExactSOS : CertStatus::HeuristicInfeasible;
        p.lambda_min = g.at("lambda_min").get<double>();
        r.grid.push_back(p);
    }
    for (const auto& iv : j.at("intervals"))
        r.intervals.push_back({endpoint_from_json(iv.at("lo")), endpoint_from_json(iv.at("hi"))});
    return r;
}

}  // namespace cmheat
