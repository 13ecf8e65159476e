#include "cmheat/alphascan.hpp"
#include "cmheat/certify.hpp"
#include "cmheat/gram.hpp"
#include "cmheat/heatsim.hpp"
#include "cmheat/papercheck.hpp"
#include "cmheat/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cmheat;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoCertificate = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string tol = "1/1000";
};

Rational parse_rational(const std::string& what, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(what + ": not a rational number: '" + text + "'");
    }
}

CertifyOptions certify_options(const Globals& g) {
    CertifyOptions o;
    o.search.seed = g.seed;
    o.search.threads = g.threads;
    return o;
}

std::vector<std::string> strs(const std::vector<XiMonomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.str());
    return out;
}

std::string joined(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out;
}

const char* kScaling =
    "(Scaling) d^n H/dt^n = (-1)^(n+1) * a/2^n * int u^a F_n dx along u_t = u_xx/2";

// ---- derive ----

struct DeriveArgs {
    int n = 0;
    bool counts_only = false;
    bool show_generators = false;
    bool family = false;
};

int cmd_derive(const Globals& g, const DeriveArgs& a) {
    if (a.n < 1 || a.n > 6) throw UsageError("derive: --n must be in 1..6");
    auto gens = generators(a.n);
    auto cls = classify_monomials(a.n);
    auto basis = gram_basis(a.n);
    std::size_t ell = weight_monomials(2 * a.n).size();
    ordered_json j;
    j["n"] = a.n;
    j["counts"] = {{"generators", gens.size()},
                   {"monomials", ell},
                   {"representable", cls.representable.size()},
                   {"must_vanish", cls.must_vanish.size()},
                   {"gram_basis", basis.size()}};
    std::optional<SymbolicElimination> e;
    if (a.family) e = eliminate_symbolic(assemble_normalized(a.n));
    if (g.json) {
        if (!a.counts_only) {
            j["S0"] = to_string(derive_S0(a.n));
            ordered_json ts = ordered_json::array();
            for (const auto& gen : gens)
                ts.push_back({{"partition", gen.partition.str()}, {"poly", to_string(gen.poly)}});
            j["generators"] = ts;
            j["representable"] = strs(cls.representable);
            j["must_vanish"] = strs(cls.must_vanish);
            j["gram_basis"] = strs(basis);
            if (e) {
                j["family"] = to_string(e->reduced);
                j["free"] = e->free_names();
                ordered_json sol = ordered_json::object();
                for (const auto& [i, f] : e->solution) sol[e->reg->name(i)] = f.str();
                j["solved"] = sol;
            }
        }
        j["scaling"] = kScaling;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "n = " << a.n << "\n"
              << "r = " << gens.size() << "  l = " << ell << "  gram = " << basis.size()
              << "  must-vanish = " << cls.must_vanish.size() << "\n";
    if (a.counts_only) return kExitOk;
    std::cout << "S0 = " << to_string(derive_S0(a.n)) << "\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::cout << "T" << i + 1 << " = " << to_string(gens[i].poly);
        if (a.show_generators) std::cout << "    p = " << gens[i].partition.str();
        std::cout << "\n";
    }
    std::cout << "representable: " << joined(strs(cls.representable)) << "\n"
              << "must vanish:   " << joined(strs(cls.must_vanish)) << "\n"
              << "gram basis:    " << joined(strs(basis)) << "\n";
    if (e) {
        for (const auto& [i, f] : e->solution) std::cout << e->reg->name(i) << " = " << f.str() << "\n";
        std::cout << "F" << a.n << " = " << to_string(e->reduced) << "\n";
    }
    std::cout << kScaling << "\n";
    return kExitOk;
}

// ---- certify ----

struct CertifyArgs {
    int n = 0;
    std::string alpha;
    bool emit_sos = false;
    int restarts = 0;
};

int cmd_certify(const Globals& g, const CertifyArgs& a) {
    if (a.n < 1 || a.n > kDefaultMaxOrder) throw UsageError("certify: --n must be in 1..8");
    Rational alpha = parse_rational("--alpha", a.alpha);
    if (alpha.sign() <= 0 || alpha == Rational(1)) throw UsageError("certify: --alpha must be positive and != 1");
    CertifyOptions opt = certify_options(g);
    if (a.restarts > 0) opt.search.restarts = a.restarts;
    Certificate c = certify(a.n, alpha, opt);
    if (g.json) {
        std::cout << to_json(c).dump(2) << "\n";
    } else {
        std::cout << "n = " << c.n << "  alpha = " << c.alpha << "  sigma = " << c.sigma << "\n"
                  << "status: " << (c.exact() ? "ExactSOS" : "HeuristicInfeasible")
                  << "  best lambda_min = " << c.best_lambda_min << "\n";
        if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
        if (c.exact()) {
            std::cout << "params:";
            for (const auto& [name, v] : c.params) std::cout << " " << name << "=" << v;
            std::cout << "\n";
            if (a.emit_sos) std::cout << "sigma*(S0 + sum c_j T_j) = " << format_sos(c.squares) << "\n";
        }
    }
    return c.exact() ? kExitOk : kExitNoCertificate;
}

// ---- scan ----

struct ScanArgs {
    int n = 0;
    std::string lo, hi, step;
    bool no_refine = false;
};

// Default grids: (0, 3.5] for n <= 3, (0.5, 2.5) for n = 4, (1.3, 2.1) for n >= 5.
std::array<std::string, 3> default_grid(int n) {
    if (n <= 3) return {"1/20", "7/2", "1/20"};
    if (n == 4) return {"11/20", "49/20", "1/20"};
    return {"33/25", "52/25", "1/50"};
}

int cmd_scan(const Globals& g, const ScanArgs& a) {
    if (a.n < 1 || a.n > kDefaultMaxOrder) throw UsageError("scan: --n must be in 1..8");
    auto grid = default_grid(a.n);
    Rational lo = parse_rational("--lo", a.lo.empty() ? grid[0] : a.lo),
             hi = parse_rational("--hi", a.hi.empty() ? grid[1] : a.hi),
             step = parse_rational("--step", a.step.empty() ? grid[2] : a.step), tol = parse_rational("--tol", g.tol);
    if (lo.sign() <= 0 || hi < lo || step.sign() <= 0 || tol.sign() <= 0)
        throw UsageError("scan: need 0 < lo <= hi, step > 0, tol > 0");
    ScanOptions opt;
    opt.certify = certify_options(g);
    opt.threads = g.threads;
    opt.refine = !a.no_refine;
    opt.refine_tol = tol;
    ScanReport r = scan(a.n, lo, hi, step, opt);
    if (g.json) {
        std::cout << to_json(r).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "n = " << r.n << "\n";
    for (const auto& p : r.grid)
        std::cout << "  alpha = " << p.alpha << " (" << p.alpha.to_double() << ")  "
                  << (p.status == CertStatus::ExactSOS ? "feasible" : "no certificate")
                  << "  lambda_min = " << p.lambda_min << "\n";
    std::cout << "intervals:";
    if (r.intervals.empty()) std::cout << " none";
    for (const auto& iv : r.intervals) std::cout << " " << iv.str();
    std::cout << "\n";
    return kExitOk;
}

// ---- simulate ----

struct SimulateArgs {
    std::string mix;
    double alpha = 0.0, t0 = 0.0, h = 0.0;
    int nmax = kMaxSimOrder;
    std::string csv;
};

int cmd_simulate(const Globals& g, const SimulateArgs& a) {
    Mixture m;
    try {
        m = parse_mixture(a.mix);
        m.validate();
    } catch (const std::exception& ex) {
        throw UsageError(std::string("simulate: ") + ex.what());
    }
    if (!(a.alpha > 0.0) || !(a.t0 > 0.0) || a.nmax < 1 || a.nmax > kMaxSimOrder)
        throw UsageError("simulate: need alpha > 0, t0 > 0, 1 <= nmax <= 5");
    SimReport r;
    try {
        r = derivative_signs(m, a.alpha, a.t0, a.nmax, a.h);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("simulate: ") + ex.what());
    }
    if (!a.csv.empty()) {
        std::ofstream os(a.csv);
        if (!os) throw std::runtime_error("cannot write " + a.csv);
        std::vector<double> times;
        for (int i = 0; i <= 100; ++i) times.push_back(a.t0 * (0.5 + 1.5 * i / 100.0));
        write_entropy_csv(os, m, a.alpha, times);
    }
    if (g.json) {
        std::cout << to_json(r).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "alpha = " << r.alpha << (r.alpha == 1.0 ? " (Shannon)" : "") << "  t0 = " << r.t0
              << "  h = " << r.h << "  flow u_t = u_xx/2\n";
    std::string pattern;
    for (const auto& o : r.orders) {
        std::ostringstream line;
        line.precision(10);
        line << "  d^" << o.n << "H/dt^" << o.n << " = " << o.value << "  +- " << o.error << "  sign "
             << sign_symbol(o.sign);
        std::cout << line.str() << "\n";
        pattern += (pattern.empty() ? "" : ",") + std::string(sign_symbol(o.sign));
    }
    std::cout << "signs: " << pattern << "\n";
    return kExitOk;
}

// ---- verify-paper ----

int cmd_verify_paper(const Globals& g) {
    auto checks = verify_paper();
    if (g.json) {
        std::cout << to_json(checks).dump(2) << "\n";
    } else {
        int ver = 0, exp = 0, bad = 0;
        for (const auto& c : checks) {
            std::cout << c.id << "  " << check_status_name(c.status);
            if (c.status == CheckStatus::Discrepant) std::cout << (c.expected ? " (expected)" : " (UNEXPECTED)");
            std::cout << "  " << c.detail << "\n";
            if (c.status == CheckStatus::Verified) ++ver;
            else if (c.status == CheckStatus::Discrepant) (c.expected ? exp : bad)++;
        }
        std::cout << checks.size() << " checks: " << ver << " verified, " << exp << " expected discrepancies, "
                  << bad << " unexpected\n";
    }
    return has_unexpected_discrepancy(checks) ? 1 : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy derivative sign certificates along the heat flow"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; command-line flags override it");
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed of the randomized PSD search")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--tol", g.tol, "Bisection tolerance for scan boundaries (p/q or decimal)")
        ->capture_default_str();

    DeriveArgs da;
    auto* derive = app.add_subcommand("derive", "S0, generators and monomial classes at order n");
    derive->add_option("--n", da.n, "Derivative order (1..6)")->required();
    derive->add_flag("--counts-only", da.counts_only, "Only print counts");
    derive->add_flag("--show-generators", da.show_generators, "Label generators with their partitions");
    derive->add_flag("--family", da.family, "Also print the reduced family F_n and the solved c_j");

    CertifyArgs ca;
    auto* cert = app.add_subcommand("certify", "Exact SOS certificate at a rational alpha");
    cert->add_option("--n", ca.n, "Derivative order")->required();
    cert->add_option("--alpha", ca.alpha, "alpha as p/q or decimal")->required();
    cert->add_flag("--emit-sos", ca.emit_sos, "Print the sum of squares");
    cert->add_option("--restarts", ca.restarts, "Search restarts (default 32)");

    ScanArgs sa;
    auto* sc = app.add_subcommand("scan", "Feasible alpha intervals on a grid");
    sc->add_option("--n", sa.n, "Derivative order")->required();
    sc->add_option("--lo", sa.lo, "Grid start (default depends on n)");
    sc->add_option("--hi", sa.hi, "Grid end (default depends on n)");
    sc->add_option("--step", sa.step, "Grid step (default depends on n)");
    sc->add_flag("--no-refine", sa.no_refine, "Skip boundary bisection");

    SimulateArgs ma;
    auto* sim = app.add_subcommand("simulate", "Numeric entropy derivative signs for a Gaussian mixture");
    sim->add_option("--mix", ma.mix, "Mixture as w:mu:s triples, comma separated")->required();
    sim->add_option("--alpha", ma.alpha, "Entropy parameter (1 = Shannon)")->required();
    sim->add_option("--t0", ma.t0, "Time")->required();
    sim->add_option("--nmax", ma.nmax, "Highest order (<= 5)")->capture_default_str();
    sim->add_option("--dt", ma.h, "Finite-difference time step (default 0.01 t0)");
    sim->add_option("--csv", ma.csv, "Write H(t) on [t0/2, 2 t0] to this file");

    app.add_subcommand("verify-paper", "Re-derive and compare every displayed identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*derive) return cmd_derive(g, da);
        if (*cert) return cmd_certify(g, ca);
        if (*sc) return cmd_scan(g, sa);
        if (*sim) return cmd_simulate(g, ma);
        return cmd_verify_paper(g);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
