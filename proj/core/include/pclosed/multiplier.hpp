#pragma once

#include <vector>

#include "pclosed/linalg.hpp"
#include "pclosed/pdecomp.hpp"

namespace pclosed {

/// The homogeneous K^p-linear system whose solutions are the multipliers
/// a = sum_I a_I x^I with sum_i d(a f_i)/dx_i = 0.
///
/// Unknowns and equations are both indexed by [0, p-1]^n in lexicographic
/// order. Entries are stored as p-th roots, so solving over K for the roots
/// of a_I solves the original system over K^p.
struct MultiplierSystem {
    PrimeChar ch;
    std::size_t arity;
    std::vector<MultiIndex> unknowns;
    std::vector<MultiIndex> equations;
    RatFnMatrix matrix;

    std::size_t row_of(const MultiIndex& index) const;
    std::size_t column_of(const MultiIndex& index) const;
};

/// sum_i d(f_i)/dx_i.
RatFn divergence(const std::vector<RatFn>& f);

/// Throws EmptyInput for an empty list and Mismatch when the count differs
/// from the arity.
MultiplierSystem build_system(const std::vector<RatFn>& f);

/// A nonzero a with sum_i d(a f_i)/dx_i = 0. Returns 1 when the tuple is
/// already divergence-free; otherwise a is a polynomial with leading
/// coefficient 1. The postcondition is checked before returning.
RatFn find_multiplier(const std::vector<RatFn>& f);

}  // namespace pclosed
