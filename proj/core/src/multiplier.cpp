#include "pclosed/multiplier.hpp"

#include <algorithm>

namespace pclosed {

namespace {

void validate(const std::vector<RatFn>& f) {
    if (f.empty()) fail(ErrorCode::EmptyInput, "multiplier needs at least one coefficient");
    const std::size_t n = f.front().arity();
    const PrimeChar ch = f.front().characteristic();
    if (f.size() != n) fail(ErrorCode::Mismatch, "coefficient count differs from arity");
    for (const RatFn& c : f)
        if (c.arity() != n || c.characteristic() != ch)
            fail(ErrorCode::Mismatch, "coefficients disagree in arity or characteristic");
}

// [0, p-1]^n in lexicographic order (first entry most significant).
std::vector<MultiIndex> all_indices(PrimeChar ch, std::size_t n) {
    const auto p = static_cast<Exponent>(ch.value());
    std::vector<MultiIndex> out;
    ExponentVector e(n, 0);
    while (true) {
        out.emplace_back(ch, e);
        std::size_t v = n;
        while (v > 0 && e[v - 1] == p - 1) e[--v] = 0;
        if (v == 0) break;
        ++e[v - 1];
    }
    return out;
}

std::size_t flat_index(const MultiIndex& index, PrimeChar ch) {
    std::size_t k = 0;
    for (const Exponent e : index.exps()) k = k * ch.value() + static_cast<std::size_t>(e);
    return k;
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_one()) return b;
    if (b.is_one() || a == b) return a;
    return *divide_exact(a * b, gcd(a, b));
}

}  // namespace

std::size_t MultiplierSystem::row_of(const MultiIndex& index) const { return flat_index(index, ch); }

std::size_t MultiplierSystem::column_of(const MultiIndex& index) const {
    return flat_index(index, ch);
}

RatFn divergence(const std::vector<RatFn>& f) {
    validate(f);
    RatFn out(f.front().characteristic(), f.front().arity());
    for (std::size_t i = 0; i < f.size(); ++i) out += partial(f[i], i);
    return out;
}

MultiplierSystem build_system(const std::vector<RatFn>& f) {
    validate(f);
    const PrimeChar ch = f.front().characteristic();
    const std::size_t n = f.size();
    const auto p = static_cast<Exponent>(ch.value());

    // Clear denominators with a p-th power, which passes through every
    // partial derivative: a multiplier for (d^p f_i) is one for (f_i).
    Poly d = Poly::constant(ch, n, 1);
    for (const RatFn& c : f) d = lcm(d, c.den());
    const RatFn scale(d.frobenius());
    std::vector<PDecomp> parts;
    parts.reserve(n);
    for (const RatFn& c : f) parts.push_back(p_decompose(c * scale));

    MultiplierSystem sys{ch, n, all_indices(ch, n), all_indices(ch, n), {}};
    const std::size_t size = sys.unknowns.size();
    sys.matrix.assign(size, std::vector<RatFn>(size, RatFn(ch, n)));

    // a_I x^I * F_{i,J}^p x^J = (a_I F_{i,J} x^C)^p x^Q with I + J = Q + pC,
    // and d/dx_i sends x^Q to q_i x^(Q - e_i) while fixing p-th powers.
    ExponentVector q(n), carry(n);
    for (const MultiIndex& col : sys.unknowns) {
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [j, root] : parts[i].roots()) {
                for (std::size_t v = 0; v < n; ++v) {
                    const Exponent s = col[v] + j[v];
                    q[v] = s % p;
                    carry[v] = s / p;
                }
                if (q[i] == 0) continue;
                const Exponent qi = q[i];
                q[i] -= 1;
                const std::size_t row = sys.row_of(MultiIndex(ch, q));
                RatFn term = root * RatFn(Poly::monomial(ch, n, carry, qi));
                sys.matrix[row][sys.column_of(col)] += term;
            }
        }
    }
    return sys;
}

RatFn find_multiplier(const std::vector<RatFn>& f) {
    validate(f);
    const PrimeChar ch = f.front().characteristic();
    const std::size_t n = f.size();
    if (divergence(f).is_zero()) return RatFn::constant(ch, n, 1);

    const MultiplierSystem sys = build_system(f);
    const auto kernel = kernel_solve(sys.matrix);
    if (!kernel) fail(ErrorCode::InvariantViolation, "multiplier system has trivial kernel");

    // Scale the root vector by a K-element (a changes by its p-th power):
    // clear denominators, then divide out the common factor.
    Poly common_den = Poly::constant(ch, n, 1);
    for (const RatFn& r : *kernel)
        if (!r.is_zero()) common_den = lcm(common_den, r.den());
    std::vector<Poly> roots;
    roots.reserve(kernel->size());
    for (const RatFn& r : *kernel)
        roots.push_back(r.is_zero() ? Poly(ch, n) : r.num() * *divide_exact(common_den, r.den()));
    Poly content(ch, n);
    for (const Poly& r : roots)
        if (!r.is_zero()) content = gcd(content, r);
    Poly a(ch, n);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (roots[k].is_zero()) continue;
        const Poly root = *divide_exact(roots[k], content);
        const ExponentVector e(sys.unknowns[k].exps().begin(), sys.unknowns[k].exps().end());
        a += root.frobenius().shifted(e);
    }
    RatFn out(a.monic());

    std::vector<RatFn> scaled;
    scaled.reserve(n);
    for (const RatFn& c : f) scaled.push_back(out * c);
    if (out.is_zero() || !divergence(scaled).is_zero())
        fail(ErrorCode::InvariantViolation, "multiplier fails its postcondition");
    return out;
}

}  // namespace pclosed
