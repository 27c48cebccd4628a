#include "pclosed/field.hpp"

#include <limits>
#include <ostream>
#include <string>

namespace pclosed {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeChar::PrimeChar(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
        fail(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeChar::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeChar::inv(std::uint32_t a) const {
    if (a % p_ == 0) fail(ErrorCode::ZeroDenominator, "inverse of zero in F_p");
    // Extended Euclid on (a, p).
    std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return reduce(s0);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

}  // namespace pclosed
