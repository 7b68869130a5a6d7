#pragma once

#include "gmlie/welement.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmlie {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parsed expression. Generator is x or y, CentralVar is t, u or v; Variable
/// is any other identifier (polynomial mode only). Brackets are left-normed.
struct Expr {
    enum class Kind { Generator, CentralVar, Variable, Number, Sum, ScalarMul, Bracket, Product, Power };

    Kind kind;
    std::string name;              // Generator, CentralVar, Variable
    Rational value;                // Number, ScalarMul
    int exponent = 0;              // Power
    std::vector<ExprPtr> children; // Sum, ScalarMul (1), Bracket (>= 2), Product (>= 2), Power (1)

    static ExprPtr generator(std::string n);
    static ExprPtr central(std::string n);
    static ExprPtr variable(std::string n);
    static ExprPtr number(Rational q);
    static ExprPtr sum(std::vector<ExprPtr> terms);
    static ExprPtr scalar_mul(Rational q, ExprPtr e);
    static ExprPtr bracket(std::vector<ExprPtr> items);
    static ExprPtr product(std::vector<ExprPtr> factors);
    static ExprPtr power(ExprPtr base, int n);
};

bool operator==(const Expr& a, const Expr& b);

/// Syntax error with 1-based line and column of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

enum class ParseMode {
    /// x, y are generators and t, u, v central; other names are errors.
    Lie,
    /// Every identifier is a commuting variable.
    Poly,
};

/// expr := ['-'] term (('+'|'-') term)*
/// term := [rational ['*']] factor ('*' factor)* | rational
/// factor := primary ['^' int]
/// primary := ident | '[' expr (',' expr)+ ']' | '(' expr ')' | rational
/// rational := int ['/' int]
/// The middle dot is accepted as '*'.
ExprPtr parse(std::string_view text, ParseMode mode = ParseMode::Lie);

/// Canonical text; parse(print(e)) == e for parser output.
std::string print(const ExprPtr& e);

/// Value in W at the given order.
WElement eval_w(const ExprPtr& e, int order);

/// Value as a polynomial over vars; every Variable must belong to vars.
Poly eval_poly(const ExprPtr& e, const VarSpecPtr& vars);

/// Sorted distinct Variable names occurring in e.
std::vector<std::string> variable_names(const ExprPtr& e);

} // namespace gmlie
