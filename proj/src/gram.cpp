#include "cmheat/gram.hpp"

#include "cmheat/flow.hpp"

#include <set>
#include <stdexcept>

namespace cmheat {

namespace {

bool is_const_coef(const Rational&) { return true; }
bool is_const_coef(const RatFunc& k) { return k.is_constant(); }
Rational invert(const Rational& k) { return k.inverse(); }
RatFunc invert(const RatFunc& k) { return RatFunc(Rational(1)) / k; }

RegistryPtr make_registry(int n, std::size_t& num_c, std::size_t& num_lam) {
    num_c = enumerate_partitions(2 * n - 1).size();
    num_lam = slack_count(n);
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= num_c; ++j) names.push_back("c" + std::to_string(j));
    for (std::size_t j = 1; j <= num_lam; ++j) names.push_back("lam" + std::to_string(j));
    return std::make_shared<const ParamRegistry>(std::move(names));
}

XiPolyF lift_const(const XiPolyA& p, const RegistryPtr& reg) {
    return p.map<AffineForm>([&](const AlphaPoly& c) { return AffineForm(reg, c); });
}

XiPolyF add_generators(XiPolyF base, const RegistryPtr& reg, int n) {
    std::size_t j = 0;
    for (const auto& g : generators(n)) {
        AffineForm cj = AffineForm::param(reg, j++);
        base += g.poly.map<AffineForm>([&](const AlphaPoly& c) { return cj * c; });
    }
    return base;
}

template <class K>
Elimination<K> eliminate_impl(int n, const RegistryPtr& reg, std::size_t num_c, const XiPoly<Affine<K>>& poly) {
    Elimination<K> out;
    out.n = n;
    out.reg = reg;
    const auto mc = classify_monomials(n);
    std::vector<Affine<K>> rows;
    for (const auto& m : mc.must_vanish) rows.push_back(poly.coeff(m));
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> piv;  // (column, row)

    // Highest-index generators first: the xi_1-heavy T_j rarely touch must-vanish
    // monomials, so low-index c's end up as pivots.
    for (std::size_t col = num_c; col-- > 0;) {
        std::ptrdiff_t best = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || coeff_is_zero(rows[r].coef(col))) continue;
            if (best < 0) best = static_cast<std::ptrdiff_t>(r);
            else if (is_const_coef(rows[r].coef(col)) && !is_const_coef(rows[static_cast<std::size_t>(best)].coef(col)))
                best = static_cast<std::ptrdiff_t>(r);
        }
        if (best < 0) continue;
        auto b = static_cast<std::size_t>(best);
        rows[b] *= invert(rows[b].coef(col));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == b) continue;
            K f = rows[r].coef(col);
            if (!coeff_is_zero(f)) rows[r] -= rows[b] * f;
        }
        used[b] = true;
        piv.emplace_back(col, b);
    }

    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!used[r] && !rows[r].is_zero()) out.violated.push_back(mc.must_vanish[r]);

    std::set<std::size_t> pivset;
    for (const auto& [col, row] : piv) {
        Affine<K> s = rows[row];
        s.set_coef(col, K());
        out.solution.emplace(col, -s);
        pivset.insert(col);
    }
    out.pivots.assign(pivset.begin(), pivset.end());
    for (std::size_t col = 0; col < num_c; ++col)
        if (!pivset.count(col)) out.free_params.push_back(col);

    for (const auto& [m, c] : poly.terms()) {
        Affine<K> v = c.substitute([&](std::size_t i) -> const Affine<K>* {
            auto it = out.solution.find(i);
            return it == out.solution.end() ? nullptr : &it->second;
        });
        out.reduced.add_term(m, v);
    }
    if (out.consistent())
        for (const auto& m : mc.must_vanish)
            if (out.reduced.contains(m)) throw std::logic_error("eliminate: must-vanish monomial survived: " + m.str());
    return out;
}

}  // namespace

std::size_t slack_count(int n) {
    auto basis = gram_basis(n);
    std::map<XiMonomial, std::size_t> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) ++pairs[basis[i] * basis[j]];
    std::size_t k = 0;
    for (const auto& kv : pairs) k += kv.second - 1;
    return k;
}

Assembled assemble(int n, int sigma) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("assemble: sigma must be +1 or -1");
    Assembled a;
    a.n = n;
    a.sigma = sigma;
    a.reg = make_registry(n, a.num_c, a.num_lam);
    XiPolyF p = add_generators(lift_const(derive_S0(n), a.reg), a.reg, n);
    a.poly = sigma == 1 ? p : -p;
    return a;
}

Assembled assemble_normalized(int n) {
    Assembled a;
    a.n = n;
    a.sigma = 0;
    a.reg = make_registry(n, a.num_c, a.num_lam);
    XiPolyA diff = derive_S0(n) - generators(n).front().poly;
    XiPolyA base = diff.map<AlphaPoly>([&](const AlphaPoly& c) {
        auto [q, rem] = div_linear(c, Rational(1));
        if (!rem.is_zero()) throw std::logic_error("assemble_normalized: S0 - T1 not divisible by alpha-1");
        return n % 2 == 0 ? q : -q;
    });
    a.poly = add_generators(lift_const(base, a.reg), a.reg, n);
    return a;
}

template <class K>
std::vector<std::string> Elimination<K>::free_names() const {
    std::vector<std::string> v;
    for (auto i : free_params) v.push_back(reg->name(i));
    return v;
}

SymbolicElimination eliminate_symbolic(const Assembled& a) {
    auto p = a.poly.map<Affine<RatFunc>>(
        [](const AffineForm& f) { return f.map<RatFunc>([](const AlphaPoly& c) { return RatFunc(c); }); });
    return eliminate_impl<RatFunc>(a.n, a.reg, a.num_c, p);
}

FixedElimination eliminate_fixed(const Assembled& a, const Rational& alpha) {
    return eliminate_impl<Rational>(a.n, a.reg, a.num_c, at_alpha(a.poly, alpha));
}

FixedElimination at_alpha(const SymbolicElimination& e, const Rational& alpha) {
    auto ev = [&](const Affine<RatFunc>& f) { return f.map<Rational>([&](const RatFunc& c) { return c.eval(alpha); }); };
    FixedElimination out;
    out.n = e.n;
    out.reg = e.reg;
    out.pivots = e.pivots;
    out.free_params = e.free_params;
    out.violated = e.violated;
    for (const auto& [k, v] : e.solution) out.solution.emplace(k, ev(v));
    out.reduced = e.reduced.map<Affine<Rational>>(ev);
    return out;
}

template <class K>
GramProblem<K> build_gram(const Elimination<K>& e) {
    GramProblem<K> g;
    g.n = e.n;
    g.reg = e.reg;
    g.basis = gram_basis(e.n);
    const std::size_t N = g.basis.size();
    g.matrix.assign(N, std::vector<Affine<K>>(N, Affine<K>(e.reg, K())));
    const K half(Rational(1) / Rational(2));

    std::size_t lam = e.reg->contains("lam1") ? e.reg->index("lam1") : e.reg->size();
    const auto mc = classify_monomials(e.n);
    for (const auto& m : mc.representable) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j)
                if (g.basis[i] * g.basis[j] == m) pairs.emplace_back(i, j);
        Affine<K> first = e.reduced.coeff(m);
        if (first.registry() == nullptr) first = Affine<K>(e.reg, first.constant());
        std::vector<Affine<K>> contrib(pairs.size());
        for (std::size_t s = 1; s < pairs.size(); ++s) {
            contrib[s] = Affine<K>::param(e.reg, lam++);
            first -= contrib[s];
        }
        contrib[0] = first;
        for (std::size_t s = 0; s < pairs.size(); ++s) {
            auto [i, j] = pairs[s];
            if (i == j) g.matrix[i][i] = contrib[s];
            else g.matrix[i][j] = g.matrix[j][i] = contrib[s] * half;
        }
    }
    for (const auto& m : mc.must_vanish)
        if (e.reduced.contains(m)) g.residual_constraints.push_back(e.reduced.coeff(m));

    std::set<std::size_t> used;
    for (const auto& row : g.matrix)
        for (const auto& f : row)
            for (const auto& kv : f.terms()) used.insert(kv.first);
    g.params.assign(used.begin(), used.end());
    return g;
}

template <class K>
XiPoly<Affine<K>> expand_gram(const GramProblem<K>& g) {
    XiPoly<Affine<K>> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out.add_term(g.basis[i] * g.basis[j], g.matrix[i][j]);
    return out;
}

std::vector<std::vector<Rational>> evaluate_gram(const GramProblem<Rational>& g, const std::vector<Rational>& values) {
    std::vector<Rational> v = values;
    v.resize(g.reg->size());
    std::vector<std::vector<Rational>> M(g.size(), std::vector<Rational>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) M[i][j] = g.matrix[i][j].evaluate(v);
    return M;
}

std::vector<Rational> complete_params(const FixedElimination& e, const std::vector<Rational>& values) {
    std::vector<Rational> v = values;
    v.resize(e.reg->size());
    for (const auto& [k, f] : e.solution) v[k] = f.evaluate(v);
    return v;
}

template struct Elimination<Rational>;
template struct Elimination<RatFunc>;
template GramProblem<Rational> build_gram(const Elimination<Rational>&);
template GramProblem<RatFunc> build_gram(const Elimination<RatFunc>&);
template XiPoly<Affine<Rational>> expand_gram(const GramProblem<Rational>&);
template XiPoly<Affine<RatFunc>> expand_gram(const GramProblem<RatFunc>&);

}  // namespace cmheat
