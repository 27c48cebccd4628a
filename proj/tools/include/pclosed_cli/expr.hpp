#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pclosed/ratfn.hpp"

namespace pclosed::cli {

/// Malformed expression text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct Expr {
    enum class Kind { Integer, Variable, Negate, Add, Sub, Mul, Div, Pow };

    Kind kind;
    std::string digits;         // Integer: decimal literal, arbitrary length
    std::size_t variable = 0;   // Variable: 0-based index
    std::int64_t exponent = 0;  // Pow
    std::vector<std::unique_ptr<Expr>> kids;
};

using ExprPtr = std::unique_ptr<Expr>;

/// expr   := term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := '-' factor | base ('^' sint)?
/// base   := uint | var | '(' expr ')'
/// var    := 'x' | 'y' when arity <= 2, else 'x' uint (1-based)
///
/// sint   := '-'? uint ('^' uint)*   (folded right to left)
///
/// '^' binds tighter than unary minus, so -x^2 is -(x^2). Exponents are
/// integers, so x^2^3 means x^(2^3).
ExprPtr parse_expr(std::string_view text, std::size_t arity);

/// Throws pclosed::Error(ZeroDenominator) on division by zero.
RatFn eval_expr(const Expr& e, PrimeChar ch, std::size_t arity);

/// parse_expr followed by eval_expr.
RatFn parse_ratfn(std::string_view text, PrimeChar ch, std::size_t arity);

}  // namespace pclosed::cli
