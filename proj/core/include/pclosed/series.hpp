#pragma once

#include <cstdint>
#include <optional>

#include "pclosed/ratfn.hpp"

namespace pclosed {

/// Truncation data for the explicit p-closed power-series family
///   f =  sum_{i=0}^{level} (dh/dy)^(p^i) c^((p^i - 1)/(p - 1)) y^(p^i - 1)
///   g = -sum_{i=0}^{level} (dh/dx)^(p^i) c^((p^i - 1)/(p - 1)) x^(p^i - 1)
/// with c a polynomial in x^p and y^p.
class SeriesSpec {
public:
    /// Throws MalformedSeries when c has an exponent not divisible by p, when
    /// h and c differ in ring, or when p^level would overflow exponents.
    SeriesSpec(Poly h, Poly c, unsigned level);

    const Poly& h() const noexcept { return h_; }
    const Poly& c() const noexcept { return c_; }
    unsigned level() const noexcept { return level_; }
    PrimeChar characteristic() const noexcept { return h_.characteristic(); }

private:
    Poly h_;
    Poly c_;
    unsigned level_;
};

struct SeriesPair {
    Poly f;
    Poly g;
};

/// Truncates by whole series terms, so the pair is exactly divergence-free.
SeriesPair series_generate(const SeriesSpec& spec);

struct SeriesReport {
    Poly f, g;
    bool divergence_free = false;
    RatFn c_f, c_g;
    /// f^p c_g - g^p c_f.
    Poly obstruction;
    /// p (p^level - 1): every obstruction monomial of lower total degree
    /// must vanish.
    std::int64_t threshold = 0;
    bool vanishes_below_threshold = false;
    /// Lowest total degree carrying a nonzero obstruction term; empty when
    /// the obstruction is exactly zero.
    std::optional<int> lowest_degree;
    /// c_f = sum_{j=1}^{level} (dh/dy)^(p^j) c^((p^j-1)/(p-1)) y^(p^j - p)
    /// and the matching identity for c_g.
    bool c_closed_form_matches = false;

    bool ok() const noexcept {
        return divergence_free && vanishes_below_threshold && c_closed_form_matches;
    }
};

/// Checks are reported, not raised.
SeriesReport series_verify(const SeriesSpec& spec);

}  // namespace pclosed
