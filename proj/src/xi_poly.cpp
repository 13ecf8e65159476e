#include "cmheat/xi_poly.hpp"

#include <sstream>

namespace cmheat {

XiMonomial::XiMonomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("XiMonomial: negative exponent");
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

XiMonomial XiMonomial::var(int index, int power) {
    if (index < 1) throw std::invalid_argument("XiMonomial: index must be >= 1");
    std::vector<int> e(static_cast<std::size_t>(index), 0);
    e.back() = power;
    return XiMonomial(std::move(e));
}

int XiMonomial::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) w += static_cast<int>(i + 1) * e_[i];
    return w;
}

int XiMonomial::degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
}

XiMonomial XiMonomial::operator*(const XiMonomial& o) const {
    std::vector<int> r(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) r[i] += o.e_[i];
    return XiMonomial(std::move(r));
}

XiMonomial XiMonomial::shifted(int index, int delta) const {
    std::vector<int> r = e_;
    if (static_cast<int>(r.size()) < index) r.resize(static_cast<std::size_t>(index), 0);
    r[static_cast<std::size_t>(index - 1)] += delta;
    return XiMonomial(std::move(r));
}

bool operator<(const XiMonomial& a, const XiMonomial& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.e_ < b.e_;
}

std::string XiMonomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

XiPolyQ at_alpha(const XiPolyA& p, const Rational& a) {
    return p.map<Rational>([&](const AlphaPoly& c) { return c.eval(a); });
}

XiPoly<Affine<Rational>> at_alpha(const XiPolyF& p, const Rational& a) {
    return p.map<Affine<Rational>>([&](const AffineForm& f) {
        return f.map<Rational>([&](const AlphaPoly& c) { return c.eval(a); });
    });
}

XiPolyA lift(const XiPolyQ& p) {
    return p.map<AlphaPoly>([](const Rational& c) { return AlphaPoly(c); });
}

namespace {

double monomial_value(const XiMonomial& m, std::span<const double> xi) {
    if (m.max_index() > static_cast<int>(xi.size()))
        throw std::out_of_range("eval_at: missing value for xi_" + std::to_string(m.max_index()));
    double v = 1.0;
    for (int i = 1; i <= m.max_index(); ++i)
        for (int k = 0; k < m.exponent(i); ++k) v *= xi[static_cast<std::size_t>(i - 1)];
    return v;
}

bool needs_parens(const std::string& s) { return s.find_first_of("+-", 1) != std::string::npos; }

template <class C, class Fmt>
std::string render(const XiPoly<C>& p, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string c = fmt(it->second);
        bool neg = !c.empty() && c[0] == '-' && !needs_parens(c);
        std::string mag = neg ? c.substr(1) : c;
        std::string term;
        if (it->first.is_one()) term = needs_parens(mag) ? "(" + mag + ")" : mag;
        else if (mag == "1") term = it->first.str();
        else term = (needs_parens(mag) ? "(" + mag + ")" : mag) + "*" + it->first.str();
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? "-" : "+") + term;
    }
    return out;
}

const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(int v, const char* const* table) {
    std::string s = std::to_string(v), r;
    for (char ch : s) r += table[ch - '0'];
    return r;
}

std::string pretty_monomial(const XiMonomial& m) {
    std::string s;
    for (int i = 1; i <= m.max_index(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        s += "ξ" + digits(i, kSub);
        if (e > 1) s += digits(e, kSup);
    }
    return s;
}

template <class C, class Fmt>
std::string render_pretty(const XiPoly<C>& p, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string c = fmt(it->second);
        bool neg = !c.empty() && c[0] == '-' && !needs_parens(c);
        std::string mag = neg ? c.substr(1) : c;
        std::string coef = mag == "1" && !it->first.is_one() ? "" : (needs_parens(mag) ? "(" + mag + ")" : mag);
        std::string term = coef + pretty_monomial(it->first);
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string alpha_pretty(const AlphaPoly& c) {
    std::string s = c.str(), r;
    for (char ch : s) {
        if (ch == 'a') r += "α";
        else if (ch == '*') continue;
        else r += ch;
    }
    return r;
}

}  // namespace

double eval_at(const XiPolyA& p, const Rational& a, std::span<const double> xi) {
    double acc = 0.0;
    for (const auto& [m, c] : p.terms()) acc += c.eval(a).to_double() * monomial_value(m, xi);
    return acc;
}

double eval_at(const XiPolyQ& p, std::span<const double> xi) {
    double acc = 0.0;
    for (const auto& [m, c] : p.terms()) acc += c.to_double() * monomial_value(m, xi);
    return acc;
}

std::string to_string(const XiPolyA& p) {
    return render(p, [](const AlphaPoly& c) { return c.str(); });
}
std::string to_string(const XiPolyQ& p) {
    return render(p, [](const Rational& c) { return c.str(); });
}
std::string to_string(const XiPolyF& p) {
    return render(p, [](const AffineForm& c) { return c.str(); });
}
std::string to_string(const XiPoly<Affine<Rational>>& p) {
    return render(p, [](const Affine<Rational>& c) { return c.str(); });
}
std::string to_string(const XiPoly<Affine<RatFunc>>& p) {
    return render(p, [](const Affine<RatFunc>& c) { return c.str(); });
}

std::string to_pretty(const XiPolyA& p) { return render_pretty(p, alpha_pretty); }
std::string to_pretty(const XiPolyQ& p) {
    return render_pretty(p, [](const Rational& c) { return c.str(); });
}

}  // namespace cmheat

namespace cmheat {

XiPolyQ expand_squares(const std::vector<WeightedSquare>& squares) {
    XiPolyQ out;
    for (const auto& sq : squares) out += (sq.poly * sq.poly).scaled(sq.weight);
    return out;
}

}  // namespace cmheat
