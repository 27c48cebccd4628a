#include "test_util.hpp"

using namespace pclosed;

TEST(PrimeChar, AcceptsPrimes) {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 65521ull, 2147483647ull})
        EXPECT_EQ(PrimeChar(p).value(), p);
}

TEST(PrimeChar, RejectsNonPrimes) {
    for (std::uint64_t n : {0ull, 1ull, 4ull, 6ull, 9ull, 15ull, 65535ull, 4294967297ull})
        EXPECT_ERROR(PrimeChar{n}, ErrorCode::NotPrime);
}

TEST(PrimeChar, RejectsPrimesBeyondWord) {
    // 2^32 + 15 is prime but does not fit the coefficient width.
    EXPECT_TRUE(is_prime(4294967311ull));
    EXPECT_ERROR(PrimeChar{4294967311ull}, ErrorCode::NotPrime);
}

TEST(PrimeChar, ReduceTakesLeastResidue) {
    const PrimeChar ch(7);
    EXPECT_EQ(ch.reduce(-1), 6u);
    EXPECT_EQ(ch.reduce(-14), 0u);
    EXPECT_EQ(ch.reduce(15), 1u);
}

TEST(PrimeChar, InverseOfZeroThrows) { EXPECT_ERROR(PrimeChar(5).inv(0), ErrorCode::ZeroDenominator); }

TEST(PrimeChar, LargePrimeMultiplicationDoesNotOverflow) {
    const PrimeChar ch(4294967291ull);
    const std::uint32_t a = ch.value() - 1;
    EXPECT_EQ(ch.mul(a, a), 1u);
    EXPECT_EQ(ch.add(a, a), ch.value() - 2);
}

TEST(Fp, FermatHoldsForEveryScalar) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        const PrimeChar ch(p);
        for (std::uint32_t v = 0; v < p; ++v) {
            const Fp a(ch, v);
            EXPECT_EQ(a.pow(p), a);
            if (v != 0) EXPECT_EQ(a * a.inverse(), Fp(ch, 1));
        }
    }
}

TEST(Fp, WilsonTheorem) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        const PrimeChar ch(p);
        Fp f(ch, 1);
        for (std::uint32_t k = 1; k < p; ++k) f = f * Fp(ch, k);
        EXPECT_EQ(f, Fp(ch, -1)) << p;
    }
}

TEST(Fp, MixedCharacteristicIsAnError) {
    EXPECT_ERROR(Fp(PrimeChar(3), 1) + Fp(PrimeChar(5), 1), ErrorCode::Mismatch);
}

TEST(Fp, Printing) {
    std::ostringstream os;
    os << Fp(PrimeChar(5), -2);
    EXPECT_EQ(os.str(), "3");
}
