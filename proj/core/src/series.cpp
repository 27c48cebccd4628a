#include "pclosed/series.hpp"

#include <algorithm>

#include "pclosed/criterion.hpp"

namespace pclosed {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

Poly xy_monomial(PrimeChar ch, std::uint64_t ex, std::uint64_t ey) {
    const ExponentVector e{static_cast<Exponent>(ex), static_cast<Exponent>(ey)};
    return Poly::monomial(ch, 2, e);
}

// c^((p^i - 1)/(p - 1)) = c * c^p * ... * c^(p^(i-1)).
Poly c_power(const Poly& c, unsigned i) {
    Poly out = Poly::constant(c.characteristic(), 2, 1);
    Poly frob = c;
    for (unsigned k = 0; k < i; ++k) {
        out *= frob;
        frob = frob.frobenius();
    }
    return out;
}

Poly frobenius_iterate(Poly b, unsigned i) {
    while (i-- > 0) b = b.frobenius();
    return b;
}

}  // namespace

SeriesSpec::SeriesSpec(Poly h, Poly c, unsigned level)
    : h_(std::move(h)), c_(std::move(c)), level_(level) {
    if (h_.arity() != 2 || c_.arity() != 2 || h_.characteristic() != c_.characteristic())
        fail(ErrorCode::MalformedSeries, "h and c must be polynomials in x, y over one F_p");
    const auto p = static_cast<Exponent>(h_.characteristic().value());
    for (std::size_t t = 0; t < c_.size(); ++t)
        for (const Exponent e : c_.exponents(t))
            if (e % p != 0) fail(ErrorCode::MalformedSeries, "c must be a polynomial in x^p, y^p");
    const auto degrees = static_cast<std::uint64_t>(1 + std::max(0, h_.total_degree()) +
                                                    std::max(0, c_.total_degree()));
    if (level_ > 20 || ipow(static_cast<std::uint64_t>(p), level_) * degrees > kMaxExponent)
        fail(ErrorCode::MalformedSeries, "series level too large for exact expansion");
}

SeriesPair series_generate(const SeriesSpec& spec) {
    const PrimeChar ch = spec.characteristic();
    const std::uint64_t p = ch.value();
    const Poly hy = partial(spec.h(), 1);
    const Poly hx = partial(spec.h(), 0);
    Poly f(ch, 2), g(ch, 2);
    for (unsigned i = 0; i <= spec.level(); ++i) {
        const std::uint64_t pi = ipow(p, i);
        const Poly ci = c_power(spec.c(), i);
        f += frobenius_iterate(hy, i) * ci * xy_monomial(ch, 0, pi - 1);
        g -= frobenius_iterate(hx, i) * ci * xy_monomial(ch, pi - 1, 0);
    }
    return {std::move(f), std::move(g)};
}

SeriesReport series_verify(const SeriesSpec& spec) {
    const PrimeChar ch = spec.characteristic();
    const std::uint64_t p = ch.value();
    SeriesPair pair = series_generate(spec);
    SeriesReport r{pair.f, pair.g, false, RatFn(ch, 2), RatFn(ch, 2), Poly(ch, 2), 0, false, {}, false};
    const RatFn f(pair.f), g(pair.g);
    r.divergence_free = check_divergence_free(f, g);
    r.threshold = static_cast<std::int64_t>(p * (ipow(p, spec.level()) - 1));
    if (!r.divergence_free) return r;

    const CCoefficients c = c_coefficients(f, g);
    r.c_f = c.c_f;
    r.c_g = c.c_g;
    r.obstruction = (f.frobenius() * c.c_g - g.frobenius() * c.c_f).num();
    if (r.obstruction.is_zero()) {
        r.vanishes_below_threshold = true;
    } else {
        // Terms are sorted by descending total degree; the last is lowest.
        const auto last = r.obstruction.exponents(r.obstruction.size() - 1);
        r.lowest_degree = static_cast<int>(last[0] + last[1]);
        r.vanishes_below_threshold = *r.lowest_degree >= r.threshold;
    }

    const Poly hy = partial(spec.h(), 1);
    const Poly hx = partial(spec.h(), 0);
    Poly expect_f(ch, 2), expect_g(ch, 2);
    for (unsigned j = 1; j <= spec.level(); ++j) {
        const std::uint64_t pj = ipow(p, j);
        const Poly cj = c_power(spec.c(), j);
        expect_f += frobenius_iterate(hy, j) * cj * xy_monomial(ch, 0, pj - p);
        expect_g -= frobenius_iterate(hx, j) * cj * xy_monomial(ch, pj - p, 0);
    }
    r.c_closed_form_matches = RatFn(expect_f) == c.c_f && RatFn(expect_g) == c.c_g;
    return r;
}

}  // namespace pclosed
