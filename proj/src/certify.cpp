#include "cmheat/certify.hpp"

#include "cmheat/parse.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cmheat {

Certificate certify(int n, const Rational& alpha, Regime regime, const CertifyOptions& opt) {
    if (regime_of(alpha) != regime) throw std::invalid_argument("regime does not match alpha = " + alpha.str());
    Certificate c;
    c.n = n;
    c.alpha = alpha;
    c.sigma = sign_convention(n, regime);

    const Assembled a = assemble(n, c.sigma);
    const FixedElimination e = eliminate_fixed(a, alpha);
    for (std::size_t i = 0; i < a.reg->size(); ++i) c.params.emplace_back(a.reg->name(i), Rational(0));
    if (!e.consistent()) {
        c.best_lambda_min = -std::numeric_limits<double>::infinity();
        c.note = "must-vanish constraints are inconsistent at this alpha";
        return c;
    }
    const GramProblem<Rational> g = build_gram(e);
    SearchOptions so = opt.search;
    so.stop_above = 0.0;
    SearchResult sr = maximize_lambda_min(g, so);
    c.best_lambda_min = sr.best;

    NumericGram ng(g);
    const double unit = std::max(std::abs(ng.at(sr.params).trace()) / static_cast<double>(g.size()), 1e-300);
    if (sr.best < -opt.near_zero * unit) {
        c.note = "no certificate found (numeric search, " + std::to_string(sr.restarts_used) + " restarts)";
        return c;
    }
    for (long D : opt.ladder) {
        std::vector<Rational> values(a.reg->size());
        for (std::size_t k = 0; k < g.params.size(); ++k)
            values[g.params[k]] = Rational::approximate(sr.params[k], mpz_class(D));
        LdlResult ld = exact_psd(evaluate_gram(g, values));
        if (!ld.psd) continue;
        std::vector<Rational> full = complete_params(e, values);
        for (std::size_t i = 0; i < full.size(); ++i) c.params[i].second = full[i];
        c.squares = sos_from_ldl(ld.L, ld.D, g.basis);
        c.status = CertStatus::ExactSOS;
        c.note = "exact LDL^T after rounding with denominators <= " + std::to_string(D);
        if (!verify_certificate(c)) throw std::logic_error("certify: certificate failed exact re-expansion");
        return c;
    }
    c.note = sr.best >= opt.accept_rel * unit ? "numerically feasible but rounding failed exact check"
                                              : "no certificate found (boundary case, rounding failed)";
    return c;
}

Certificate certify(int n, const Rational& alpha, const CertifyOptions& opt) {
    return certify(n, alpha, regime_of(alpha), opt);
}

XiPolyQ certified_polynomial(const Certificate& c) {
    const Assembled a = assemble(c.n, c.sigma);
    std::vector<Rational> values(a.reg->size());
    for (const auto& [name, v] : c.params)
        if (a.reg->contains(name)) values[a.reg->index(name)] = v;
    return at_alpha(a.poly, c.alpha).map<Rational>([&](const Affine<Rational>& f) { return f.evaluate(values); });
}

bool verify_certificate(const Certificate& c) {
    for (const auto& sq : c.squares)
        if (sq.weight.sign() <= 0) return false;
    return expand_squares(c.squares) == certified_polynomial(c);
}

nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["alpha"] = c.alpha.str();
    j["sigma"] = c.sigma;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v.str();
    j["params"] = params;
    nlohmann::ordered_json sq = nlohmann::ordered_json::array();
    for (const auto& s : c.squares) sq.push_back({{"weight", s.weight.str()}, {"poly", to_string(s.poly)}});
    j["squares"] = sq;
    j["status"] = c.exact() ? "ExactSOS" : "HeuristicInfeasible";
    if (std::isfinite(c.best_lambda_min)) j["best_lambda_min"] = c.best_lambda_min;
    else j["best_lambda_min"] = nullptr;
    j["note"] = c.note;
    return j;
}

Certificate certificate_from_json(const nlohmann::ordered_json& j) {
    Certificate c;
    c.n = j.at("n").get<int>();
    c.alpha = Rational::parse(j.at("alpha").get<std::string>());
    c.sigma = j.at("sigma").get<int>();
    for (const auto& [k, v] : j.at("params").items()) c.params.emplace_back(k, Rational::parse(v.get<std::string>()));
    for (const auto& s : j.at("squares"))
        c.squares.push_back({Rational::parse(s.at("weight").get<std::string>()), parse_xipoly_q(s.at("poly").get<std::string>())});
    const std::string st = j.at("status").get<std::string>();
    if (st == "ExactSOS") c.status = CertStatus::ExactSOS;
    else if (st == "HeuristicInfeasible") c.status = CertStatus::HeuristicInfeasible;
    else throw std::invalid_argument("unknown certificate status: " + st);
    const auto& b = j.at("best_lambda_min");
    c.best_lambda_min = b.is_null() ? -std::numeric_limits<double>::infinity() : b.get<double>();
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    return c;
}

bool operator==(const Certificate& a, const Certificate& b) {
    if (a.squares.size() != b.squares.size()) return false;
    for (std::size_t i = 0; i < a.squares.size(); ++i)
        if (a.squares[i].weight != b.squares[i].weight || !(a.squares[i].poly == b.squares[i].poly)) return false;
    return a.n == b.n && a.alpha == b.alpha && a.sigma == b.sigma && a.params == b.params && a.status == b.status &&
           a.best_lambda_min == b.best_lambda_min && a.note == b.note;
}

std::string format_sos(const std::vector<WeightedSquare>& squares) {
    if (squares.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < squares.size(); ++k) {
        if (k) os << "\n+ ";
        else os << "  ";
        os << squares[k].weight.str() << " * (" << to_pretty(squares[k].poly) << ")^2";
    }
    return os.str();
}

}  // namespace cmheat
