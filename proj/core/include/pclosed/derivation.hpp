#pragma once

#include <optional>
#include <vector>

#include "pclosed/ratfn.hpp"

namespace pclosed {

/// The derivation sum_i f_i * d/dx_i on K = F_p(x_1, ..., x_n).
class Derivation {
public:
    /// Throws EmptyInput for no coefficients, Mismatch for mixed arity/char
    /// or a coefficient count different from the arity.
    explicit Derivation(std::vector<RatFn> coeffs);
    /// f d/dx + g d/dy.
    static Derivation planar(RatFn f, RatFn g);

    const std::vector<RatFn>& coeffs() const noexcept { return coeffs_; }
    const RatFn& coeff(std::size_t i) const { return coeffs_.at(i); }
    std::size_t arity() const noexcept { return coeffs_.size(); }
    PrimeChar characteristic() const noexcept { return coeffs_.front().characteristic(); }
    bool is_zero() const noexcept;

    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    std::vector<RatFn> coeffs_;
};

/// D(b) = sum_i f_i * d(b)/dx_i.
RatFn apply(const Derivation& d, const RatFn& b);

/// D^p, represented by its images (D^p(x_1), ..., D^p(x_n)). In
/// characteristic p the p-th iterate of a derivation is again a derivation,
/// so these images determine it.
Derivation brute_power_p(const Derivation& d);

/// D(x) D^p(y) - D(y) D^p(x), computed from brute_power_p. Arity 2 only.
RatFn brute_obstruction(const Derivation& d);

struct ClosureWitness {
    RatFn a;  // D^p = a D
    bool verified = false;
};

/// The element a with D^p = a D, or nullopt when D is not p-closed.
/// The zero derivation gets a = 0.
std::optional<ClosureWitness> closure_witness(const Derivation& d);
/// Same, reusing an already computed D^p.
std::optional<ClosureWitness> closure_witness(const Derivation& d, const Derivation& power);

}  // namespace pclosed
