#include "cmheat/parse.hpp"

#include <cctype>
#include <map>

namespace cmheat {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, ExprPtr l, ExprPtr r = nullptr) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    ExprPtr sum() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+')) e = node(Expr::Kind::Add, e, term());
            else if (eat('-')) e = node(Expr::Kind::Sub, e, term());
            else return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*')) e = node(Expr::Kind::Mul, e, unary());
            else if (eat('/')) e = node(Expr::Kind::Div, e, unary());
            else return e;
        }
    }
    ExprPtr unary() {
        if (eat('-')) return node(Expr::Kind::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power() {
        ExprPtr base = atom();
        if (!eat('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected non-negative integer exponent");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->lhs = base;
        e->power = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return e;
    }
    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Num;
            try {
                e->num = Rational::parse(s_.substr(start, pos_ - start));
            } catch (const std::exception&) {
                fail("bad number");
            }
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt") {
                if (!eat('(')) fail("expected '(' after sqrt");
                ExprPtr arg = sum();
                if (!eat(')')) fail("expected ')'");
                return node(Expr::Kind::Sqrt, arg);
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Var;
            e->name = name;
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// x<i> -> i, else 0.
int xi_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') return 0;
    for (std::size_t k = 1; k < name.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) return 0;
    int i = std::stoi(name.substr(1));
    if (i < 1) throw ParseError("xi index must be >= 1: " + name);
    return i;
}

template <class P, class Mul>
P power_of(const P& base, int e, const P& one, Mul&& mul) {
    P r = one;
    for (int k = 0; k < e; ++k) r = mul(r, base);
    return r;
}

XiPolyF eval_f(const ExprPtr& e, const RegistryPtr& reg) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::Num:
        return XiPolyF::constant(AffineForm(AlphaPoly(e->num)));
    case K::Var: {
        if (e->name == "a") return XiPolyF::constant(AffineForm(AlphaPoly::alpha()));
        if (int i = xi_index(e->name)) return XiPolyF(XiMonomial::var(i), AffineForm(AlphaPoly(1)));
        if (!reg || !reg->contains(e->name)) throw ParseError("unknown name '" + e->name + "'");
        return XiPolyF::constant(AffineForm::param(reg, e->name));
    }
    case K::Add:
        return eval_f(e->lhs, reg) + eval_f(e->rhs, reg);
    case K::Sub:
        return eval_f(e->lhs, reg) - eval_f(e->rhs, reg);
    case K::Neg:
        return -eval_f(e->lhs, reg);
    case K::Mul:
        try {
            return eval_f(e->lhs, reg) * eval_f(e->rhs, reg);
        } catch (const std::domain_error& ex) {
            throw ParseError(ex.what());
        }
    case K::Div: {
        XiPolyF d = eval_f(e->rhs, reg);
        if (d.size() != 1 || !d.terms().begin()->first.is_one()) throw ParseError("division by a non-constant");
        const AffineForm& f = d.terms().begin()->second;
        if (!f.is_constant() || !f.constant().is_constant()) throw ParseError("division by a non-rational");
        return eval_f(e->lhs, reg).scaled(AlphaPoly(f.constant().constant().inverse()));
    }
    case K::Pow: {
        XiPolyF b = eval_f(e->lhs, reg);
        try {
            return power_of(b, e->power, XiPolyF::constant(AffineForm(AlphaPoly(1))),
                            [](const XiPolyF& x, const XiPolyF& y) { return x * y; });
        } catch (const std::domain_error& ex) {
            throw ParseError(ex.what());
        }
    }
    case K::Sqrt:
        throw ParseError("sqrt is only allowed in surd squares");
    }
    throw ParseError("bad expression");
}

// q * sqrt(r), r > 0; r == 1 whenever the value is rational.
struct Surd {
    Rational q, r{1};
};

Surd make_surd(const Rational& q, const Rational& r) {
    Rational s;
    if (exact_sqrt(r, s)) return {q * s, Rational(1)};
    return {q, r};
}

using SurdLin = std::map<XiMonomial, Surd>;

void add_surd(SurdLin& p, const XiMonomial& m, const Surd& s) {
    if (s.q.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, s);
        return;
    }
    Rational k;
    if (!exact_sqrt(s.r / it->second.r, k))
        throw ParseError("incompatible radicands for " + m.str() + ": " + s.r.str() + " vs " + it->second.r.str());
    it->second.q += s.q * k;
    if (it->second.q.is_zero()) p.erase(it);
}

SurdLin surd_const(const Surd& s) {
    SurdLin p;
    add_surd(p, XiMonomial(), s);
    return p;
}

SurdLin surd_mul(const SurdLin& a, const SurdLin& b) {
    SurdLin r;
    for (const auto& [ma, sa] : a)
        for (const auto& [mb, sb] : b) add_surd(r, ma * mb, make_surd(sa.q * sb.q, sa.r * sb.r));
    return r;
}

const Surd& single_constant(const SurdLin& p, const char* what) {
    if (p.size() != 1 || !p.begin()->first.is_one()) throw ParseError(std::string(what) + " must be a constant");
    return p.begin()->second;
}

SurdLin eval_s(const ExprPtr& e) {
    using K = Expr::Kind;
    switch (e->kind) {
    case K::Num:
        return surd_const({e->num, Rational(1)});
    case K::Var: {
        int i = xi_index(e->name);
        if (!i) throw ParseError("only xi variables may appear in a surd square: '" + e->name + "'");
        SurdLin p;
        add_surd(p, XiMonomial::var(i), {Rational(1), Rational(1)});
        return p;
    }
    case K::Add:
    case K::Sub: {
        SurdLin l = eval_s(e->lhs);
        for (auto [m, s] : eval_s(e->rhs)) {
            if (e->kind == K::Sub) s.q = -s.q;
            add_surd(l, m, s);
        }
        return l;
    }
    case K::Neg: {
        SurdLin l = eval_s(e->lhs);
        for (auto& kv : l) kv.second.q = -kv.second.q;
        return l;
    }
    case K::Mul:
        return surd_mul(eval_s(e->lhs), eval_s(e->rhs));
    case K::Div: {
        SurdLin d = eval_s(e->rhs);
        if (d.empty()) throw ParseError("division by zero");
        const Surd& s = single_constant(d, "divisor");
        // 1/(q sqrt r) = sqrt(r) / (q r)
        return surd_mul(eval_s(e->lhs), surd_const(make_surd((s.q * s.r).inverse(), s.r)));
    }
    case K::Pow: {
        SurdLin b = eval_s(e->lhs);
        return power_of(b, e->power, surd_const({Rational(1), Rational(1)}), surd_mul);
    }
    case K::Sqrt: {
        SurdLin a = eval_s(e->lhs);
        if (a.empty()) return a;
        const Surd& s = single_constant(a, "sqrt argument");
        if (s.r != Rational(1) || s.q.sign() < 0) throw ParseError("sqrt argument must be a non-negative rational");
        return surd_const(make_surd(Rational(1), s.q));
    }
    }
    throw ParseError("bad expression");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

XiPolyF to_xipoly(const ExprPtr& e, const RegistryPtr& reg) { return eval_f(e, reg); }

XiPolyF parse_xipoly(std::string_view text, const RegistryPtr& reg) { return eval_f(parse_expr(text), reg); }

XiPolyA parse_xipoly_alpha(std::string_view text) {
    XiPolyF f = parse_xipoly(text);
    return f.map<AlphaPoly>([](const AffineForm& c) {
        if (!c.is_constant()) throw ParseError("unexpected parameter");
        return c.constant();
    });
}

XiPolyQ parse_xipoly_q(std::string_view text) {
    XiPolyA p = parse_xipoly_alpha(text);
    return p.map<Rational>([](const AlphaPoly& c) {
        if (!c.is_constant()) throw ParseError("unexpected alpha");
        return c.constant();
    });
}

WeightedSquare parse_surd_square(std::string_view text) {
    SurdLin s = eval_s(parse_expr(text));
    WeightedSquare out{Rational(1), {}};
    if (s.empty()) return out;
    out.weight = s.begin()->second.r;
    for (const auto& [m, v] : s) {
        Rational k;
        if (!exact_sqrt(v.r / out.weight, k))
            throw ParseError("square of " + m.str() + " term is not a rational multiple of the others");
        out.poly.add_term(m, v.q * k);
    }
    return out;
}

}  // namespace cmheat
