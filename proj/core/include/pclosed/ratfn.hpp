#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "pclosed/poly.hpp"

namespace pclosed {

/// An element of K = F_p(x_1, ..., x_n), kept in canonical form: the
/// fraction is fully reduced and the denominator has leading coefficient 1.
/// Every constructor re-canonicalizes, so equality is componentwise.
class RatFn {
public:
    /// The zero element.
    RatFn(PrimeChar ch, std::size_t arity);
    explicit RatFn(Poly num);
    /// Throws ZeroDenominator when den is zero.
    RatFn(Poly num, Poly den);

    static RatFn constant(PrimeChar ch, std::size_t arity, std::int64_t c);
    static RatFn variable(PrimeChar ch, std::size_t arity, std::size_t index);
    /// c * x^exps with exponents of either sign.
    static RatFn laurent_monomial(PrimeChar ch, std::size_t arity,
                                  std::span<const std::int64_t> exps, std::int64_t c = 1);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    PrimeChar characteristic() const noexcept { return num_.characteristic(); }
    std::size_t arity() const noexcept { return num_.arity(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// Total number of stored terms in numerator and denominator.
    std::size_t term_count() const noexcept { return num_.size() + den_.size(); }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    /// Throws ZeroDenominator on division by zero.
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    RatFn inverse() const;
    /// Integer power; negative exponents invert (zero base throws).
    RatFn pow(std::int64_t e) const;
    RatFn frobenius() const;
    RatFn scaled(std::uint32_t c) const;

    friend bool operator==(const RatFn& a, const RatFn& b) noexcept = default;

private:
    struct Canonical {};
    RatFn(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void check_compatible(const RatFn& o) const;

    Poly num_;
    Poly den_;
};

RatFn partial(const RatFn& b, std::size_t var);
RatFn iterated_partial(const RatFn& b, std::size_t var, std::size_t count);

/// Canonical fraction num/den: reduced, denominator monic.
RatFn ratfn_normalize(const Poly& num, const Poly& den);

/// `num` when the denominator is 1, else `(num)/(den)`.
std::string to_string(const RatFn& b);

}  // namespace pclosed
