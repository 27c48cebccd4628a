#pragma once

#include <optional>

#include "pclosed/derivation.hpp"
#include "pclosed/pdecomp.hpp"

namespace pclosed {

enum class Axis { X = 0, Y = 1 };

/// Exact test of dF/dx + dG/dy = 0 (arity 2).
bool check_divergence_free(const RatFn& F, const RatFn& G);

/// The (p-1)-fold partial derivative along one axis, read off the
/// p-decomposition: for b = sum b_ij x^i y^j with b_ij in K^p,
/// d^(p-1)/dx^(p-1) b = -sum_j b_(p-1),j y^j since (p-1)! = -1 mod p.
RatFn fast_partial_pow(const RatFn& b, Axis axis);

struct CCoefficients {
    RatFn c_f;  // -d^(p-1)F/dy^(p-1)
    RatFn c_g;  // -d^(p-1)G/dx^(p-1)
};

/// Both results lie in K^p (checked). Throws DivergenceNotZero unless
/// (F, G) is divergence-free.
CCoefficients c_coefficients(const RatFn& F, const RatFn& G);

/// f^p d^(p-1)(ag)/dx^(p-1) - g^p d^(p-1)(af)/dy^(p-1), which equals
/// a (D(x) D^p(y) - D(y) D^p(x)) for D = f d/dx + g d/dy. Throws
/// DivergenceNotZero unless (af, ag) is divergence-free.
RatFn rhs_obstruction(const RatFn& f, const RatFn& g, const RatFn& a);

struct CriterionReport {
    PrimeChar p;
    RatFn f, g;
    RatFn a;            // multiplier used
    RatFn c_f, c_g;     // c-coefficients of (af, ag), elements of K^p
    RatFn c_f_root, c_g_root;
    RatFn obstruction;  // unreduced; zero exactly when p-closed
    bool p_closed = false;
    std::optional<ClosureWitness> witness;
};

/// Decides p-closedness of f d/dx + g d/dy with the fast criterion. With
/// `with_witness` the brute-force closure witness is attached as well and
/// must agree with the verdict (InvariantViolation otherwise).
CriterionReport is_p_closed(const RatFn& f, const RatFn& g, bool with_witness = false);

/// c in K^p with (c_f, c_g) = (c f^p, c g^p), or nullopt when no such c
/// exists (equivalently, D is not p-closed). Requires (f, g) divergence-free.
std::optional<RatFn> star_certificate(const RatFn& f, const RatFn& g);

/// For nonzero coprime divergence-free polynomials: p-closed iff
/// c_f = c_g = 0. Throws ZeroInput, NotCoprime or DivergenceNotZero.
bool coprime_case_check(const Poly& f, const Poly& g);

/// f = dh/dy + c_f y^(p-1), g = -dh/dx + c_g x^(p-1).
struct HamiltonianDecomposition {
    RatFn h;
    RatFn c_f, c_g;
};

/// Builds h by antidifferentiating on the p-decomposition. The I = (0,0)
/// component of h (an additive constant in K^p) is set to zero. Throws
/// DivergenceNotZero unless (f, g) is divergence-free.
HamiltonianDecomposition hamiltonian_decompose(const RatFn& f, const RatFn& g);

}  // namespace pclosed
