#pragma once

#include <cstdint>

#include "pclosed/derivation.hpp"

namespace pclosed {

/// Classification of y^m_y d/dx + x^m_x d/dy for integer (possibly negative)
/// exponents. With n_z = m_z + 1 and eps_z = -1 if p | n_z else 0, the
/// derivation is p-closed iff p divides neither n_x nor n_y, or
/// n_x = n_y = 0.
struct MonomialClass {
    std::int64_t m_x, m_y;
    std::int64_t n_x, n_y;
    Fp eps_x, eps_y;
    bool p_closed;
};

MonomialClass classify_monomial(std::int64_t m_x, std::int64_t m_y, PrimeChar p);

/// (xy)^(-p) (eps_x x^n_x y^(p n_y) - eps_y x^(p n_x) y^n_y).
RatFn monomial_obstruction(std::int64_t m_x, std::int64_t m_y, PrimeChar p);

/// y^m_y d/dx + x^m_x d/dy.
Derivation monomial_derivation(std::int64_t m_x, std::int64_t m_y, PrimeChar p);

}  // namespace pclosed
