#pragma once

#include "cmheat/xi_poly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmheat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax tree for polynomial expressions such as
/// "(a-3)*c3*x1^4 + 3/2*x1^2*x2 - sqrt(3/5)*x5".
struct Expr {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt };
    Kind kind = Kind::Num;
    Rational num;
    std::string name;
    int power = 0;
    std::shared_ptr<const Expr> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar: sum := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
/// unary := '-' unary | power; power := atom ('^' int)?;
/// atom := number | name | 'sqrt(' sum ')' | '(' sum ')'.
/// Numbers are integers or decimals (read exactly). Names: a, x<i>, c<j>, lam<j>.
ExprPtr parse_expr(std::string_view text);

/// Evaluate into a xi-polynomial with affine coefficients. Names c<j>/lam<j>
/// must be declared in reg; 'a' is alpha. Division only by nonzero rationals.
XiPolyF to_xipoly(const ExprPtr& e, const RegistryPtr& reg);
XiPolyF parse_xipoly(std::string_view text, const RegistryPtr& reg = nullptr);

/// Parameter-free shortcut; throws ParseError if parameters appear.
XiPolyA parse_xipoly_alpha(std::string_view text);
/// Rational-coefficient shortcut; throws ParseError if alpha or parameters appear.
XiPolyQ parse_xipoly_q(std::string_view text);

/// Parse a linear combination whose coefficients are products of rationals and
/// square roots of rationals, and rewrite it as sqrt(w) * p with p over Q. The
/// square of the input then equals w * p^2 exactly. Throws ParseError when two
/// coefficients have radicands whose ratio is not a rational square.
WeightedSquare parse_surd_square(std::string_view text);

}  // namespace cmheat
