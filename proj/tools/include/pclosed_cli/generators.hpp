#pragma once

// Seeded random generators for the bench command and the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pclosed/pclosed.hpp"

namespace pclosed::gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Polynomial with 1..max_terms terms of total degree <= max_degree and
/// nonzero coefficients (terms may still combine).
inline Poly random_poly(Rng& rng, PrimeChar ch, std::size_t arity, int max_degree, int max_terms) {
    std::vector<std::pair<ExponentVector, std::int64_t>> terms;
    const auto count = uniform(rng, 1, max_terms);
    for (std::int64_t t = 0; t < count; ++t) {
        ExponentVector e(arity, 0);
        int budget = static_cast<int>(uniform(rng, 0, max_degree));
        for (std::size_t v = 0; v < arity && budget > 0; ++v) {
            const int take = v + 1 == arity ? budget : static_cast<int>(uniform(rng, 0, budget));
            e[v] = take;
            budget -= take;
        }
        std::shuffle(e.begin(), e.end(), rng);
        terms.emplace_back(e, uniform(rng, 1, ch.value() - 1));
    }
    return Poly::from_terms(ch, arity, terms);
}

inline Poly random_nonzero_poly(Rng& rng, PrimeChar ch, std::size_t arity, int max_degree,
                                int max_terms) {
    while (true) {
        Poly b = random_poly(rng, ch, arity, max_degree, max_terms);
        if (!b.is_zero()) return b;
    }
}

/// Rational function; the denominator is 1 about half the time.
inline RatFn random_ratfn(Rng& rng, PrimeChar ch, std::size_t arity, int max_degree, int max_terms) {
    Poly num = random_poly(rng, ch, arity, max_degree, max_terms);
    if (uniform(rng, 0, 1) == 0) return RatFn(std::move(num));
    return RatFn(std::move(num), random_nonzero_poly(rng, ch, arity, max_degree, max_terms));
}

inline RatFn random_nonzero_ratfn(Rng& rng, PrimeChar ch, std::size_t arity, int max_degree,
                                  int max_terms) {
    while (true) {
        RatFn b = random_ratfn(rng, ch, arity, max_degree, max_terms);
        if (!b.is_zero()) return b;
    }
}

/// A divergence-free pair (dh/dy + c_f y^(p-1), -dh/dx + c_g x^(p-1)) with
/// c_f, c_g random elements of K^p (zero with probability 1/2 each).
struct DivergenceFreePair {
    RatFn f, g;
};

inline DivergenceFreePair random_divergence_free(Rng& rng, PrimeChar ch, int max_degree,
                                                 int max_terms) {
    const auto top = static_cast<Exponent>(ch.value() - 1);
    const RatFn h = random_ratfn(rng, ch, 2, max_degree, max_terms);
    auto k_p_element = [&] {
        if (uniform(rng, 0, 1) == 0) return RatFn(ch, 2);
        return random_ratfn(rng, ch, 2, 1, 2).frobenius();
    };
    const RatFn ypow(Poly::monomial(ch, 2, ExponentVector{0, top}));
    const RatFn xpow(Poly::monomial(ch, 2, ExponentVector{top, 0}));
    return {partial(h, 1) + k_p_element() * ypow, -partial(h, 0) + k_p_element() * xpow};
}

inline PrimeChar pick_prime(Rng& rng, std::initializer_list<std::uint32_t> primes) {
    const auto k = uniform(rng, 0, static_cast<std::int64_t>(primes.size()) - 1);
    return PrimeChar(*(primes.begin() + k));
}

}  // namespace pclosed::gen
