#include "pclosed_cli/expr.hpp"

#include <cctype>
#include <limits>

#include "pclosed/error.hpp"

namespace pclosed::cli {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t arity) : s_(text), arity_(arity) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool at_digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

    static ExprPtr node(Expr::Kind k) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }
    static ExprPtr binary(Expr::Kind k, ExprPtr l, ExprPtr r) {
        ExprPtr e = node(k);
        e->kids.push_back(std::move(l));
        e->kids.push_back(std::move(r));
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (eat('+'))
                e = binary(Expr::Kind::Add, std::move(e), term());
            else if (eat('-'))
                e = binary(Expr::Kind::Sub, std::move(e), term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            if (eat('*'))
                e = binary(Expr::Kind::Mul, std::move(e), factor());
            else if (eat('/'))
                e = binary(Expr::Kind::Div, std::move(e), factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        if (eat('-')) {
            ExprPtr e = node(Expr::Kind::Negate);
            e->kids.push_back(factor());
            return e;
        }
        ExprPtr b = base();
        if (!eat('^')) return b;
        ExprPtr e = node(Expr::Kind::Pow);
        e->exponent = signed_exponent();
        e->kids.push_back(std::move(b));
        return e;
    }

    std::uint64_t uint_literal() {
        skip();
        const std::size_t start = i_;
        if (!at_digit()) throw ParseError(i_, "expected an integer");
        std::uint64_t v = 0;
        constexpr auto cap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
        while (at_digit()) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
            if (v > cap) throw ParseError(start, "exponent too large");
        }
        return v;
    }

    std::int64_t signed_exponent() {
        const std::size_t start = (skip(), i_);
        const bool negative = eat('-');
        std::vector<std::uint64_t> chain{uint_literal()};
        // A further '^' continues the exponent; fold right to left.
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] != '^') break;
            ++i_;
            chain.push_back(uint_literal());
        }
        std::uint64_t e = chain.back();
        constexpr auto cap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
        for (std::size_t k = chain.size() - 1; k-- > 0;) {
            std::uint64_t r = 1;
            for (std::uint64_t t = 0; t < e; ++t) {
                if (chain[k] != 0 && r > cap / chain[k]) throw ParseError(start, "exponent too large");
                r *= chain[k];
                if (r <= 1 && t > 0) break;  // 0 or 1 stays fixed
            }
            e = r;
        }
        const auto v = static_cast<std::int64_t>(e);
        return negative ? -v : v;
    }

    ExprPtr base() {
        skip();
        if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            ExprPtr e = expr();
            if (!eat(')')) throw ParseError(i_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprPtr e = node(Expr::Kind::Integer);
            while (at_digit()) e->digits.push_back(s_[i_++]);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        throw ParseError(i_, std::string("unexpected '") + c + "'");
    }

    ExprPtr variable() {
        const std::size_t start = i_;
        std::string name;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) name.push_back(s_[i_++]);
        for (std::size_t v = 0; v < arity_; ++v)
            if (name == variable_name(arity_, v)) {
                ExprPtr e = node(Expr::Kind::Variable);
                e->variable = v;
                return e;
            }
        throw ParseError(start, "unknown variable '" + name + "'");
    }

    std::string_view s_;
    std::size_t arity_;
    std::size_t i_ = 0;
};

std::int64_t reduce_digits(const std::string& digits, PrimeChar ch) {
    std::uint64_t r = 0;
    for (const char d : digits) r = (r * 10 + static_cast<std::uint64_t>(d - '0')) % ch.value();
    return static_cast<std::int64_t>(r);
}

}  // namespace

ExprPtr parse_expr(std::string_view text, std::size_t arity) {
    if (arity == 0) throw ParseError(0, "arity must be at least 1");
    return Parser(text, arity).parse();
}

RatFn eval_expr(const Expr& e, PrimeChar ch, std::size_t arity) {
    auto kid = [&](std::size_t k) { return eval_expr(*e.kids.at(k), ch, arity); };
    switch (e.kind) {
        case Expr::Kind::Integer: return RatFn::constant(ch, arity, reduce_digits(e.digits, ch));
        case Expr::Kind::Variable: return RatFn::variable(ch, arity, e.variable);
        case Expr::Kind::Negate: return -kid(0);
        case Expr::Kind::Add: return kid(0) + kid(1);
        case Expr::Kind::Sub: return kid(0) - kid(1);
        case Expr::Kind::Mul: return kid(0) * kid(1);
        case Expr::Kind::Div: return kid(0) / kid(1);
        case Expr::Kind::Pow: {
            const RatFn b = kid(0);
            if (b.is_zero() && e.exponent < 0) fail(ErrorCode::ZeroDenominator, "negative power of zero");
            return b.pow(e.exponent);
        }
    }
    fail(ErrorCode::InvariantViolation, "unknown expression node");
}

RatFn parse_ratfn(std::string_view text, PrimeChar ch, std::size_t arity) {
    return eval_expr(*parse_expr(text, arity), ch, arity);
}

}  // namespace pclosed::cli
