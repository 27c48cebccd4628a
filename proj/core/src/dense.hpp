#pragma once

// Dense recursive polynomials, used internally where the sparse
// representation is slow (gcd, exact division). Not installed.

#include <optional>

#include "pclosed/poly.hpp"

namespace pclosed::dense {

/// Upper bound on the dense coefficient count before callers should fall
/// back to sparse arithmetic.
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 22;

/// Nullopt when the dense form would exceed kMaxCells.
std::optional<Poly> gcd(const Poly& a, const Poly& b);

/// Outer nullopt: too large for dense handling. Inner nullopt: b does not divide a.
std::optional<std::optional<Poly>> divide_exact(const Poly& a, const Poly& b);

}  // namespace pclosed::dense
