#pragma once

#include <map>
#include <span>

#include "pclosed/ratfn.hpp"

namespace pclosed {

/// An exponent vector with every entry in [0, p-1]: the index of one
/// p-basis monomial x^I.
class MultiIndex {
public:
    /// Throws IndexOutOfRange when an entry lies outside [0, p-1].
    MultiIndex(PrimeChar ch, ExponentVector exps);

    std::span<const Exponent> exps() const noexcept { return exps_; }
    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    bool is_zero() const noexcept;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.exps_ < b.exps_; }

private:
    ExponentVector exps_;
};

/// b = sum over I of roots[I]^p * x^I, the unique expansion of b in the
/// p-basis {x^I : I in [0, p-1]^n} over K^p. Only nonzero roots are stored.
class PDecomp {
public:
    PDecomp(PrimeChar ch, std::size_t arity) : ch_(ch), arity_(arity) {}

    PrimeChar characteristic() const noexcept { return ch_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::map<MultiIndex, RatFn>& roots() const noexcept { return roots_; }

    /// The p-th root of the I-component; zero when absent.
    RatFn root(const MultiIndex& index) const;
    /// Stores a root; zero roots are dropped.
    void set(const MultiIndex& index, RatFn root);

    /// True when every nonzero component sits at I = 0 (b lies in K^p).
    bool concentrated_at_zero() const;
    RatFn recompose() const;

private:
    PrimeChar ch_;
    std::size_t arity_;
    std::map<MultiIndex, RatFn> roots_;
};

PDecomp p_decompose(const RatFn& b);

/// r with r^p = b; throws NotAPthPower when b is not in K^p.
RatFn pth_root(const RatFn& b);
bool is_pth_power(const RatFn& b);

}  // namespace pclosed
