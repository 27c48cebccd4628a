#include "pclosed/criterion.hpp"

#include "pclosed/multiplier.hpp"

namespace pclosed {

namespace {

void require_planar(const RatFn& a, const RatFn& b) {
    if (a.arity() != 2 || b.arity() != 2) fail(ErrorCode::Mismatch, "expected elements of F_p(x, y)");
    if (a.characteristic() != b.characteristic()) fail(ErrorCode::Mismatch, "characteristic mismatch");
}

void require_divergence_free(const RatFn& F, const RatFn& G) {
    if (!check_divergence_free(F, G))
        fail(ErrorCode::DivergenceNotZero, "d/dx(" + to_string(F) + ") + d/dy(" + to_string(G) +
                                               ") is not zero");
}

RatFn monomial(PrimeChar ch, Exponent ex, Exponent ey, std::int64_t c = 1) {
    const ExponentVector e{ex, ey};
    return RatFn(Poly::monomial(ch, 2, e, c));
}

}  // namespace

bool check_divergence_free(const RatFn& F, const RatFn& G) {
    require_planar(F, G);
    return partial(F, 0) + partial(G, 1) == RatFn(F.characteristic(), 2);
}

RatFn fast_partial_pow(const RatFn& b, Axis axis) {
    if (b.arity() != 2) fail(ErrorCode::Mismatch, "expected an element of F_p(x, y)");
    const PrimeChar ch = b.characteristic();
    const auto top = static_cast<Exponent>(ch.value() - 1);
    const std::size_t along = axis == Axis::X ? 0 : 1;
    RatFn out(ch, 2);
    const PDecomp parts = p_decompose(b);
    for (const auto& [index, root] : parts.roots()) {
        if (index[along] != top) continue;
        const RatFn basis = axis == Axis::X ? monomial(ch, 0, index[1]) : monomial(ch, index[0], 0);
        out -= root.frobenius() * basis;
    }
    return out;
}

CCoefficients c_coefficients(const RatFn& F, const RatFn& G) {
    require_divergence_free(F, G);
    CCoefficients c{-fast_partial_pow(F, Axis::Y), -fast_partial_pow(G, Axis::X)};
    if (!is_pth_power(c.c_f) || !is_pth_power(c.c_g))
        fail(ErrorCode::InvariantViolation, "c-coefficient outside K^p");
    return c;
}

RatFn rhs_obstruction(const RatFn& f, const RatFn& g, const RatFn& a) {
    require_planar(f, g);
    const RatFn af = a * f;
    const RatFn ag = a * g;
    require_divergence_free(af, ag);
    return f.frobenius() * fast_partial_pow(ag, Axis::X) -
           g.frobenius() * fast_partial_pow(af, Axis::Y);
}

CriterionReport is_p_closed(const RatFn& f, const RatFn& g, bool with_witness) {
    require_planar(f, g);
    const PrimeChar ch = f.characteristic();
    RatFn a = find_multiplier({f, g});
    const RatFn af = a * f;
    const RatFn ag = a * g;
    const CCoefficients c = c_coefficients(af, ag);
    RatFn obstruction = rhs_obstruction(f, g, a);
    CriterionReport report{ch,
                           f,
                           g,
                           std::move(a),
                           c.c_f,
                           c.c_g,
                           pth_root(c.c_f),
                           pth_root(c.c_g),
                           std::move(obstruction),
                           false,
                           std::nullopt};
    report.p_closed = report.obstruction.is_zero();
    if (with_witness) {
        report.witness = closure_witness(Derivation::planar(f, g));
        if (report.witness.has_value() != report.p_closed)
            fail(ErrorCode::InvariantViolation, "fast criterion disagrees with the closure witness");
    }
    return report;
}

std::optional<RatFn> star_certificate(const RatFn& f, const RatFn& g) {
    const CCoefficients c = c_coefficients(f, g);
    const PrimeChar ch = f.characteristic();
    RatFn cert(ch, 2);
    if (!f.is_zero())
        cert = c.c_f / f.frobenius();
    else if (!g.is_zero())
        cert = c.c_g / g.frobenius();
    if (cert * f.frobenius() != c.c_f || cert * g.frobenius() != c.c_g) return std::nullopt;
    if (!is_pth_power(cert)) fail(ErrorCode::InvariantViolation, "certificate outside K^p");
    return cert;
}

bool coprime_case_check(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorCode::ZeroInput, "coprime case needs nonzero f and g");
    if (!gcd(f, g).is_one()) fail(ErrorCode::NotCoprime, "f and g share a nontrivial factor");
    const CCoefficients c = c_coefficients(RatFn(f), RatFn(g));
    return c.c_f.is_zero() && c.c_g.is_zero();
}

HamiltonianDecomposition hamiltonian_decompose(const RatFn& f, const RatFn& g) {
    const CCoefficients c = c_coefficients(f, g);
    const PrimeChar ch = f.characteristic();
    const auto top = static_cast<Exponent>(ch.value() - 1);

    // Step 1: y-antiderivative of f - c_f y^(p-1), term by term.
    RatFn h(ch, 2);
    const PDecomp f_parts = p_decompose(f - c.c_f * monomial(ch, 0, top));
    for (const auto& [index, root] : f_parts.roots()) {
        if (index[1] == top) fail(ErrorCode::InvariantViolation, "y^(p-1) component survived");
        const std::uint32_t inv = ch.inv(static_cast<std::uint32_t>(index[1] + 1));
        h += root.frobenius() * monomial(ch, index[0], index[1] + 1, inv);
    }
    // Step 2: w = g + dh/dx is killed by d/dy; absorb w - c_g x^(p-1).
    const RatFn w = g + partial(h, 0);
    const PDecomp w_parts = p_decompose(w - c.c_g * monomial(ch, top, 0));
    for (const auto& [index, root] : w_parts.roots()) {
        if (index[1] != 0 || index[0] == top)
            fail(ErrorCode::InvariantViolation, "discrepancy term is not x-integrable");
        const std::uint32_t inv = ch.inv(static_cast<std::uint32_t>(index[0] + 1));
        h -= root.frobenius() * monomial(ch, index[0] + 1, 0, inv);
    }
    // Drop the K^p component so the representative is deterministic.
    PDecomp parts = p_decompose(h);
    parts.set(MultiIndex(ch, {0, 0}), RatFn(ch, 2));
    h = parts.recompose();

    if (partial(h, 1) + c.c_f * monomial(ch, 0, top) != f ||
        -partial(h, 0) + c.c_g * monomial(ch, top, 0) != g)
        fail(ErrorCode::InvariantViolation, "Hamiltonian decomposition does not reproduce (f, g)");
    return {std::move(h), c.c_f, c.c_g};
}

}  // namespace pclosed
