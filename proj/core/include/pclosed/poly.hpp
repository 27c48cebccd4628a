#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pclosed/field.hpp"

namespace pclosed {

using Exponent = std::int32_t;
using ExponentVector = std::vector<Exponent>;

/// Graded-lexicographic comparison: total degree first, then lexicographic
/// with x_1 most significant. Returns <0, 0, >0.
int compare_grlex(std::span<const Exponent> a, std::span<const Exponent> b) noexcept;

/// Sparse multivariate polynomial over F_p.
///
/// Terms are kept in strictly descending graded-lex order with no zero
/// coefficients, so term 0 is the leading term and the zero polynomial has
/// no terms. Exponents are stored flat (term-major) to keep the hot loops
/// allocation-free. Variables are indexed from 0.
class Poly {
public:
    Poly(PrimeChar ch, std::size_t arity);

    static Poly constant(PrimeChar ch, std::size_t arity, std::int64_t c);
    static Poly variable(PrimeChar ch, std::size_t arity, std::size_t index);
    static Poly monomial(PrimeChar ch, std::size_t arity, std::span<const Exponent> exps,
                         std::int64_t c = 1);
    /// Builds from terms in any order; like terms are combined.
    static Poly from_terms(PrimeChar ch, std::size_t arity,
                           const std::vector<std::pair<ExponentVector, std::int64_t>>& terms);

    PrimeChar characteristic() const noexcept { return ch_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// True for the zero polynomial and nonzero scalars.
    bool is_constant() const noexcept;
    bool is_one() const noexcept { return is_constant() && size() == 1 && coeffs_[0] == 1; }

    std::span<const Exponent> exponents(std::size_t term) const noexcept {
        return {exps_.data() + term * arity_, arity_};
    }
    std::uint32_t coefficient(std::size_t term) const noexcept { return coeffs_[term]; }
    std::uint32_t leading_coefficient() const noexcept { return is_zero() ? 0 : coeffs_[0]; }
    /// Coefficient of the given monomial, 0 when absent.
    std::uint32_t coefficient_of(std::span<const Exponent> exps) const;

    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    Exponent degree_in(std::size_t var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(std::uint32_t c) const;
    /// Product with the monomial x^exps.
    Poly shifted(std::span<const Exponent> exps) const;
    Poly pow(std::uint64_t e) const;
    /// b^p. Over F_p this only multiplies exponents by p.
    Poly frobenius() const;
    /// Scaled so the leading coefficient is 1 (zero stays zero).
    Poly monic() const;

    /// Coefficients with respect to one variable: result[k] is the
    /// coefficient of var^k, itself free of var.
    std::vector<Poly> coefficients_in(std::size_t var) const;
    static Poly from_coefficients(PrimeChar ch, std::size_t arity, std::size_t var,
                                  const std::vector<Poly>& coeffs);

    /// Componentwise minimum of the exponents of all terms (the largest
    /// monomial dividing this polynomial). Requires nonzero.
    ExponentVector monomial_content() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;

private:
    friend class PolyBuilder;
    friend Poly partial(const Poly& b, std::size_t var);

    void check_compatible(const Poly& o) const;
    Poly add_scaled(const Poly& o, std::uint32_t factor) const;

    PrimeChar ch_;
    std::size_t arity_;
    std::vector<Exponent> exps_;
    std::vector<std::uint32_t> coeffs_;
};

/// Formal partial derivative with respect to variable `var` (0-based).
Poly partial(const Poly& b, std::size_t var);
Poly iterated_partial(const Poly& b, std::size_t var, std::size_t count);

/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor (leading coefficient 1 under graded-lex).
/// gcd(a, 0) = monic(a); throws ZeroGcdInput when both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Variable names used for printing and parsing: x, y for arity <= 2,
/// otherwise x1..xn.
std::string variable_name(std::size_t arity, std::size_t index);

/// Canonical text form, e.g. `2*x^3*y + 4*x + 1`.
std::string to_string(const Poly& b);

}  // namespace pclosed
