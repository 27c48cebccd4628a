#include "pclosed/derivation.hpp"

#include <algorithm>

namespace pclosed {

namespace {

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_one()) return b;
    if (b.is_one() || a == b) return a;
    auto q = divide_exact(a * b, gcd(a, b));
    return std::move(*q);
}

}  // namespace

Derivation::Derivation(std::vector<RatFn> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorCode::EmptyInput, "derivation needs at least one coefficient");
    const std::size_t n = coeffs_.front().arity();
    const PrimeChar ch = coeffs_.front().characteristic();
    if (coeffs_.size() != n) fail(ErrorCode::Mismatch, "coefficient count differs from arity");
    for (const RatFn& c : coeffs_)
        if (c.arity() != n || c.characteristic() != ch)
            fail(ErrorCode::Mismatch, "derivation coefficients disagree in arity or characteristic");
}

Derivation Derivation::planar(RatFn f, RatFn g) {
    if (f.arity() != 2) fail(ErrorCode::Mismatch, "planar derivation needs arity 2");
    return Derivation({std::move(f), std::move(g)});
}

bool Derivation::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFn& c) { return c.is_zero(); });
}

RatFn apply(const Derivation& d, const RatFn& b) {
    if (b.arity() != d.arity() || b.characteristic() != d.characteristic())
        fail(ErrorCode::Mismatch, "derivation and element disagree in arity or characteristic");
    const std::size_t n = d.arity();
    const PrimeChar ch = d.characteristic();
    // Put the coefficients over one denominator c: f_i = a_i / c. Then
    // D(N/M) = (M * sum a_i dN/dx_i - N * sum a_i dM/dx_i) / (c M^2),
    // which needs a single normalization.
    Poly c = Poly::constant(ch, n, 1);
    for (const RatFn& f : d.coeffs())
        if (!f.is_zero()) c = lcm(c, f.den());
    std::vector<Poly> a;
    a.reserve(n);
    for (const RatFn& f : d.coeffs())
        a.push_back(f.is_zero() ? Poly(ch, n) : f.num() * *divide_exact(c, f.den()));

    const Poly& num = b.num();
    const Poly& den = b.den();
    Poly dnum(ch, n), dden(ch, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        dnum += a[i] * partial(num, i);
        if (!b.is_polynomial()) dden += a[i] * partial(den, i);
    }
    if (b.is_polynomial()) return RatFn(dnum, c);
    return RatFn(den * dnum - num * dden, c * den * den);
}

Derivation brute_power_p(const Derivation& d) {
    const std::size_t n = d.arity();
    const PrimeChar ch = d.characteristic();
    std::vector<RatFn> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatFn image = d.coeff(i);  // D(x_i)
        for (std::uint32_t k = 1; k < ch.value() && !image.is_zero(); ++k) image = apply(d, image);
        images.push_back(std::move(image));
    }
    return Derivation(std::move(images));
}

RatFn brute_obstruction(const Derivation& d) {
    if (d.arity() != 2) fail(ErrorCode::Mismatch, "obstruction is defined for two variables");
    const Derivation power = brute_power_p(d);
    return d.coeff(0) * power.coeff(1) - d.coeff(1) * power.coeff(0);
}

std::optional<ClosureWitness> closure_witness(const Derivation& d) {
    return closure_witness(d, brute_power_p(d));
}

std::optional<ClosureWitness> closure_witness(const Derivation& d, const Derivation& power) {
    const std::size_t n = d.arity();
    if (power.arity() != n || power.characteristic() != d.characteristic())
        fail(ErrorCode::Mismatch, "derivation and its power disagree in arity or characteristic");
    const auto pivot = std::find_if(d.coeffs().begin(), d.coeffs().end(),
                                    [](const RatFn& c) { return !c.is_zero(); });
    if (pivot == d.coeffs().end()) {
        // D = 0, and D^p = 0 = 0 * D.
        return ClosureWitness{RatFn(d.characteristic(), n), power.is_zero()};
    }
    const auto i = static_cast<std::size_t>(pivot - d.coeffs().begin());
    RatFn a = power.coeff(i) / d.coeff(i);
    for (std::size_t j = 0; j < n; ++j)
        if (power.coeff(j) != a * d.coeff(j)) return std::nullopt;
    return ClosureWitness{std::move(a), true};
}

}  // namespace pclosed
