#ifndef POLYALG_EXPR_HPP
#define POLYALG_EXPR_HPP

// Expression syntax for polynomials in the single indeterminate x:
//
//   expr   := term (('+' | '-') term)*
//   term   := '-'? factor ('*'? factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | ident | 'x' | '(' expr ')'
//
// Juxtaposition is a noncommutative product, '^' binds tighter than the
// product, and rationals are written p or p/q.

#include "polyalg/io.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polyalg {

struct Expr {
    enum class Kind { ScalarLit, Const, Var, Sum, Diff, Neg, Product, Power, Paren };

    Kind kind = Kind::ScalarLit;
    Rational value;              // ScalarLit
    std::string name;            // Const
    std::size_t exponent = 0;    // Power
    std::vector<Expr> children;  // Sum/Diff: {lhs, rhs}; Neg, Paren, Power: {operand}; Product: factors

    static Expr scalar(Rational v);
    static Expr constant(std::string name);
    static Expr var();
    static Expr binary(Kind kind, Expr lhs, Expr rhs);
    static Expr unary(Kind kind, Expr operand);
    static Expr product(std::vector<Expr> factors);
    static Expr power(Expr base, std::size_t exponent);

    friend bool operator==(const Expr&, const Expr&) = default;
};

using Bindings = std::map<std::string, RElement>;

/// [A-Za-z_][A-Za-z0-9_]* other than "x".
bool is_identifier(std::string_view name);

/// Binds every basis vector whose name is an identifier.
Bindings basis_bindings(const RAlgebraPtr& alg);

/// Throws SyntaxError (with byte offset), UnboundIdentifier or
/// NegativeExponent.
Expr parse_expr(std::string_view text, const Bindings& bindings);

/// Canonical text; parse_expr(print(e)) == e for every parsed e.
std::string print(const Expr& e);

/// Rewrites b^k as the product of k copies of b (1 for k = 0), flattening
/// into an enclosing product.
Expr expand_powers(const Expr& e);

RPolynomial lower(const Expr& e, const RAlgebraPtr& alg, const Bindings& bindings);

/// Direct evaluation of the expression at x.
RElement interpret(const Expr& e, const RElement& x, const Bindings& bindings);

}  // namespace polyalg

#endif  // POLYALG_EXPR_HPP
