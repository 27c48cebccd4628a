#include "pclosed/ratfn.hpp"

#include <optional>

namespace pclosed {

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) fail(ErrorCode::InvariantViolation, "expected exact polynomial division");
    return std::move(*q);
}

}  // namespace

RatFn ratfn_normalize(const Poly& num, const Poly& den) { return RatFn(num, den); }

RatFn::RatFn(PrimeChar ch, std::size_t arity)
    : num_(ch, arity), den_(Poly::constant(ch, arity, 1)) {}

RatFn::RatFn(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.characteristic(), num_.arity(), 1)) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.arity() != den_.arity() || num_.characteristic() != den_.characteristic())
        fail(ErrorCode::Mismatch, "numerator and denominator disagree in arity or characteristic");
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.characteristic(), num_.arity(), 1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    const std::uint32_t lc = den_.leading_coefficient();
    if (lc != 1) {
        const std::uint32_t inv = characteristic().inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFn RatFn::constant(PrimeChar ch, std::size_t arity, std::int64_t c) {
    return RatFn(Poly::constant(ch, arity, c));
}

RatFn RatFn::variable(PrimeChar ch, std::size_t arity, std::size_t index) {
    return RatFn(Poly::variable(ch, arity, index));
}

RatFn RatFn::laurent_monomial(PrimeChar ch, std::size_t arity,
                              std::span<const std::int64_t> exps, std::int64_t c) {
    if (exps.size() != arity) fail(ErrorCode::Mismatch, "exponent vector length differs from arity");
    ExponentVector up(arity, 0), down(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
        if (exps[v] >= 0)
            up[v] = static_cast<Exponent>(exps[v]);
        else
            down[v] = static_cast<Exponent>(-exps[v]);
    }
    return RatFn(Poly::monomial(ch, arity, up, c), Poly::monomial(ch, arity, down, 1));
}

void RatFn::check_compatible(const RatFn& o) const {
    if (o.arity() != arity() || o.characteristic() != characteristic())
        fail(ErrorCode::Mismatch, "arity or characteristic mismatch");
}

RatFn RatFn::operator+(const RatFn& o) const {
    check_compatible(o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    if (den_.is_one() || o.den_.is_one()) {
        // gcd(a*d + c, d) = gcd(c, d) = 1, so no reduction is needed.
        Poly n = den_.is_one() ? num_ * o.den_ + o.num_ : num_ + o.num_ * den_;
        if (n.is_zero()) return RatFn(characteristic(), arity());
        return RatFn(std::move(n), den_.is_one() ? o.den_ : den_, Canonical{});
    }
    // With g = gcd(b, d): a/b + c/d = (a*d' + c*b') / (b'*d), and any common
    // factor of that fraction divides g.
    const Poly g = gcd(den_, o.den_);
    const Poly b1 = exact_quotient(den_, g);
    const Poly d1 = exact_quotient(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    Poly d = b1 * o.den_;
    if (n.is_zero()) return RatFn(characteristic(), arity());
    if (!g.is_one()) {
        const Poly h = gcd(n, g);
        if (!h.is_one()) {
            n = exact_quotient(n, h);
            d = exact_quotient(d, h);
        }
    }
    return RatFn(std::move(n), std::move(d), Canonical{});
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Canonical{}); }

RatFn RatFn::operator*(const RatFn& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return RatFn(characteristic(), arity());
    if (den_.is_one() && o.den_.is_one()) return RatFn(num_ * o.num_);
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_one()) {
        const Poly g = gcd(a, d);
        if (!g.is_one()) {
            a = exact_quotient(a, g);
            d = exact_quotient(d, g);
        }
    }
    if (!b.is_one()) {
        const Poly g = gcd(c, b);
        if (!g.is_one()) {
            c = exact_quotient(c, g);
            b = exact_quotient(b, g);
        }
    }
    return RatFn(a * c, b * d, Canonical{});
}

RatFn RatFn::inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroDenominator, "inverse of zero");
    const std::uint32_t inv = characteristic().inv(num_.leading_coefficient());
    return RatFn(den_.scaled(inv), num_.scaled(inv), Canonical{});
}

RatFn RatFn::operator/(const RatFn& o) const {
    check_compatible(o);
    if (o.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero");
    return *this * o.inverse();
}

RatFn RatFn::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    const auto u = static_cast<std::uint64_t>(e);
    return RatFn(num_.pow(u), den_.pow(u), Canonical{});
}

RatFn RatFn::frobenius() const { return RatFn(num_.frobenius(), den_.frobenius(), Canonical{}); }

RatFn RatFn::scaled(std::uint32_t c) const {
    Poly n = num_.scaled(c);
    if (n.is_zero()) return RatFn(characteristic(), arity());
    return RatFn(std::move(n), den_, Canonical{});
}

RatFn partial(const RatFn& b, std::size_t var) {
    if (b.is_polynomial()) return RatFn(partial(b.num(), var));
    const Poly& n = b.num();
    const Poly& d = b.den();
    return RatFn(partial(n, var) * d - n * partial(d, var), d * d);
}

RatFn iterated_partial(const RatFn& b, std::size_t var, std::size_t count) {
    if (var >= b.arity()) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
    RatFn out = b;
    for (std::size_t k = 0; k < count && !out.is_zero(); ++k) out = partial(out, var);
    return out;
}

std::string to_string(const RatFn& b) {
    if (b.is_polynomial()) return to_string(b.num());
    return "(" + to_string(b.num()) + ")/(" + to_string(b.den()) + ")";
}

}  // namespace pclosed
