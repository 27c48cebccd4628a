#include "test_util.hpp"

using namespace pclosed;
using namespace pclosed::testing;

TEST(RatFn, NormalizeExamples) {
    EXPECT_EQ(ratfn_normalize(P("2*x^2", 5), P("2*x", 5)), K("x", 5));
    EXPECT_EQ(ratfn_normalize(P("x", 5), P("1", 5)), K("x", 5));
    EXPECT_EQ(ratfn_normalize(P("x^2 - y^2", 5), P("x - y", 5)), K("x + y", 5));
    EXPECT_ERROR(ratfn_normalize(P("x", 5), P("0", 5)), ErrorCode::ZeroDenominator);
}

TEST(RatFn, CanonicalFormInvariants) {
    Rng rng(21);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 40; ++t) {
            const RatFn r = gen::random_ratfn(rng, PrimeChar(p), 2, 4, 4);
            EXPECT_FALSE(r.den().is_zero());
            EXPECT_EQ(r.den().leading_coefficient(), 1u);
            if (!r.is_zero()) {
                EXPECT_TRUE(gcd(r.num(), r.den()).is_one());
            } else {
                EXPECT_TRUE(r.den().is_one());
            }
            EXPECT_EQ(ratfn_normalize(r.num(), r.den()), r);
        }
}

TEST(RatFn, EqualityIsComponentwise) {
    EXPECT_EQ(K("(x^2 + x)/(2*x)", 7), K("(x + 1)/2", 7));
    EXPECT_EQ(to_string(K("(x^2 + x)/(2*x)", 7)), "4*x + 4");
    EXPECT_EQ(to_string(K("1/(2*x + 2)", 7)), "(4)/(x + 1)");
}

TEST(RatFn, FieldAxioms) {
    Rng rng(22);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 25; ++t) {
            const PrimeChar ch(p);
            const RatFn a = gen::random_ratfn(rng, ch, 2, 3, 3);
            const RatFn b = gen::random_ratfn(rng, ch, 2, 3, 3);
            const RatFn c = gen::random_nonzero_ratfn(rng, ch, 2, 3, 3);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ((a * c) / c, a);
            EXPECT_EQ(c * c.inverse(), RatFn::constant(ch, 2, 1));
            EXPECT_EQ(a - a, RatFn(ch, 2));
            EXPECT_EQ((a + b) - b, a);
        }
}

TEST(RatFn, DivisionByZero) {
    EXPECT_ERROR(K("x", 3) / K("0", 3), ErrorCode::ZeroDenominator);
    EXPECT_ERROR(K("0", 3).inverse(), ErrorCode::ZeroDenominator);
    EXPECT_ERROR(K("0", 3).pow(-1), ErrorCode::ZeroDenominator);
}

TEST(RatFn, PowersAndLaurentMonomials) {
    EXPECT_EQ(K("x", 3).pow(-2), K("1/x^2", 3));
    EXPECT_EQ(K("x/y", 5).pow(3), K("x^3/y^3", 5));
    const std::int64_t e[] = {-1, 2};
    EXPECT_EQ(RatFn::laurent_monomial(PrimeChar(5), 2, e, 3), K("3*y^2/x", 5));
    EXPECT_EQ(K("(x+1)/y", 3).frobenius(), K("(x^3+1)/y^3", 3));
}

TEST(RatFn, QuotientRule) {
    EXPECT_EQ(partial(K("1/x", 3), 0), K("2/x^2", 3));
    EXPECT_EQ(partial(K("x/(x+y)", 5), 1), K("-x/(x+y)^2", 5));
    EXPECT_ERROR(partial(K("1/x", 3), 2), ErrorCode::IndexOutOfRange);
}

TEST(RatFn, PartialsCommuteAndPthPowerVanishes) {
    Rng rng(23);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 20; ++t) {
            const RatFn b = gen::random_ratfn(rng, PrimeChar(p), 2, 3, 3);
            EXPECT_EQ(partial(partial(b, 0), 1), partial(partial(b, 1), 0));
            EXPECT_TRUE(iterated_partial(b, 0, p).is_zero());
            EXPECT_TRUE(iterated_partial(b, 1, p).is_zero());
        }
}

TEST(RatFn, Leibniz) {
    Rng rng(24);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 20; ++t) {
            const PrimeChar ch(p);
            const RatFn a = gen::random_ratfn(rng, ch, 2, 3, 3);
            const RatFn b = gen::random_ratfn(rng, ch, 2, 3, 3);
            for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(partial(a * b, v), a * partial(b, v) + b * partial(a, v));
        }
}

TEST(RatFn, MismatchedOperands) {
    EXPECT_ERROR(K("x", 3) + K("x", 5), ErrorCode::Mismatch);
    EXPECT_ERROR(K("x", 3) * K("x", 3, 1), ErrorCode::Mismatch);
}
