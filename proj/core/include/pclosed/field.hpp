#pragma once

#include <cstdint>
#include <iosfwd>

#include "pclosed/error.hpp"

namespace pclosed {

/// The characteristic of the prime field F_p. Primality is checked once, at
/// construction, so every other type can take a PrimeChar on trust.
class PrimeChar {
public:
    explicit PrimeChar(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }

    // Arithmetic on least nonnegative residues; 64-bit intermediates.
    std::uint32_t reduce(std::int64_t v) const noexcept {
        const std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; throws ZeroDenominator on 0.
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(PrimeChar, PrimeChar) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of F_p.
class Fp {
public:
    Fp(PrimeChar ch, std::int64_t v) : ch_(ch), v_(ch.reduce(v)) {}

    std::uint32_t value() const noexcept { return v_; }
    PrimeChar characteristic() const noexcept { return ch_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fp operator+(Fp o) const { check(o); return {ch_, ch_.add(v_, o.v_), Raw{}}; }
    Fp operator-(Fp o) const { check(o); return {ch_, ch_.sub(v_, o.v_), Raw{}}; }
    Fp operator*(Fp o) const { check(o); return {ch_, ch_.mul(v_, o.v_), Raw{}}; }
    Fp operator/(Fp o) const { check(o); return {ch_, ch_.mul(v_, ch_.inv(o.v_)), Raw{}}; }
    Fp operator-() const { return {ch_, ch_.neg(v_), Raw{}}; }
    Fp pow(std::uint64_t e) const { return {ch_, ch_.pow(v_, e), Raw{}}; }
    Fp inverse() const { return {ch_, ch_.inv(v_), Raw{}}; }

    friend bool operator==(const Fp&, const Fp&) = default;

private:
    struct Raw {};
    Fp(PrimeChar ch, std::uint32_t v, Raw) : ch_(ch), v_(v) {}
    void check(Fp o) const {
        if (o.ch_ != ch_) fail(ErrorCode::Mismatch, "characteristic mismatch");
    }

    PrimeChar ch_;
    std::uint32_t v_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

}  // namespace pclosed
