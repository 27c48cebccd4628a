#include "pclosed/monomial.hpp"

#include <array>

namespace pclosed {

namespace {

bool divisible(std::int64_t n, PrimeChar p) { return n % static_cast<std::int64_t>(p.value()) == 0; }

Fp epsilon(std::int64_t n, PrimeChar p) { return Fp(p, divisible(n, p) ? -1 : 0); }

}  // namespace

MonomialClass classify_monomial(std::int64_t m_x, std::int64_t m_y, PrimeChar p) {
    const std::int64_t n_x = m_x + 1;
    const std::int64_t n_y = m_y + 1;
    const bool units = !divisible(n_x, p) && !divisible(n_y, p);
    return {m_x, m_y, n_x, n_y, epsilon(n_x, p), epsilon(n_y, p), units || (n_x == 0 && n_y == 0)};
}

RatFn monomial_obstruction(std::int64_t m_x, std::int64_t m_y, PrimeChar p) {
    const MonomialClass m = classify_monomial(m_x, m_y, p);
    const std::int64_t q = p.value();
    const std::array<std::int64_t, 2> first{m.n_x - q, q * m.n_y - q};
    const std::array<std::int64_t, 2> second{q * m.n_x - q, m.n_y - q};
    return RatFn::laurent_monomial(p, 2, first, m.eps_x.value()) -
           RatFn::laurent_monomial(p, 2, second, m.eps_y.value());
}

Derivation monomial_derivation(std::int64_t m_x, std::int64_t m_y, PrimeChar p) {
    const std::array<std::int64_t, 2> f{0, m_y};
    const std::array<std::int64_t, 2> g{m_x, 0};
    return Derivation::planar(RatFn::laurent_monomial(p, 2, f), RatFn::laurent_monomial(p, 2, g));
}

}  // namespace pclosed
