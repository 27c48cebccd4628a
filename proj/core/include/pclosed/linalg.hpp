#pragma once

#include <optional>
#include <vector>

#include "pclosed/ratfn.hpp"

namespace pclosed {

using RatFnMatrix = std::vector<std::vector<RatFn>>;

/// A nonzero vector v with M v = 0, or nullopt when the kernel is trivial.
///
/// Gauss-Jordan elimination over K. In each column the pivot is the nonzero
/// candidate with the fewest stored terms (numerator plus denominator), ties
/// going to the lowest row index. The returned vector sets the first free
/// column to 1, the other free columns to 0, and back-solves the pivots.
///
/// Throws RaggedMatrix for rows of unequal length and EmptyInput for a
/// matrix with no rows or no columns.
std::optional<std::vector<RatFn>> kernel_solve(const RatFnMatrix& m);

}  // namespace pclosed
