#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gconvex/errors.hpp"

namespace gconvex {

// Immutable expression tree over one real variable `x`.
//
// Grammar (precedence low to high): `+ -` < `* /` < unary `-` < `^`,
// with `^` right-associative. Calls: exp(), log(), sqrt(). Trees are
// shared via shared_ptr and never mutated after construction, so they
// are safe to evaluate from concurrent contexts.
enum class ExprKind {
    Constant,
    Variable,
    Neg,
    Exp,
    Log,
    Sqrt,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    double value = 0.0;  // Constant only
    ExprPtr left;        // unary child or binary lhs
    ExprPtr right;       // binary rhs
};

namespace ast {

// Node factories. Binary/unary factories fold constant operands when the
// operation is defined and finite on them; otherwise the node is kept and
// evaluation reports the domain error.
ExprPtr constant(double v);
ExprPtr variable();
ExprPtr neg(ExprPtr u);
ExprPtr exp(ExprPtr u);
ExprPtr log(ExprPtr u);
ExprPtr sqrt(ExprPtr u);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, ExprPtr b);

}  // namespace ast

// Structural equality (kinds, constant values, shapes).
bool equal(const ExprPtr& a, const ExprPtr& b);

// Parses `text`; throws ParseError with a byte offset on malformed input
// or unknown identifiers.
ExprPtr parse(std::string_view text);

// IEEE double evaluation at x. Domain violations and non-finite
// intermediate results throw EvalError instead of propagating NaN.
// Convention: 0^0 = 1.
double eval(const ExprPtr& e, double x);

// Symbolic derivative. Always succeeds on a well-formed tree; u^v with
// non-constant v differentiates through exp(v*log u).
ExprPtr differentiate(const ExprPtr& e);

// Renders the tree in the input grammar; parse(serialize(e)) is
// structurally identical to e.
std::string serialize(const ExprPtr& e);

// Replaces every variable node of `e` with `replacement` (composition).
ExprPtr substitute(const ExprPtr& e, const ExprPtr& replacement);

}  // namespace gconvex
