#include "test_util.hpp"

using namespace pclosed;
using namespace pclosed::testing;

namespace {

Derivation planar(const char* f, const char* g, std::uint32_t p) { return Derivation::planar(K(f, p), K(g, p)); }

RatFn x(std::uint32_t p) { return K("x", p); }
RatFn y(std::uint32_t p) { return K("y", p); }

}  // namespace

TEST(Derivation, ConstructionErrors) {
    EXPECT_ERROR(Derivation(std::vector<RatFn>{}), ErrorCode::EmptyInput);
    EXPECT_ERROR(Derivation({K("x", 3), K("x", 5)}), ErrorCode::Mismatch);
    // Coefficient count has to match the number of variables.
    EXPECT_ERROR(Derivation({K("x", 3)}), ErrorCode::Mismatch);
}

TEST(Apply, ImagesOfYdxX2dy) {
    const Derivation d = planar("y", "x^2", 5);
    EXPECT_EQ(apply(d, x(5)), K("y", 5));
    EXPECT_EQ(apply(d, y(5)), K("x^2", 5));
    EXPECT_EQ(apply(d, K("x*y", 5)), K("y^2 + x^3", 5));
}

TEST(Apply, KillsPthPowers) {
    Rng rng(51);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 20; ++t) {
            const PrimeChar ch(p);
            const Derivation d = Derivation::planar(gen::random_ratfn(rng, ch, 2, 3, 3), gen::random_ratfn(rng, ch, 2, 3, 3));
            EXPECT_TRUE(apply(d, gen::random_ratfn(rng, ch, 2, 2, 3).frobenius()).is_zero());
        }
}

TEST(BrutePower, DxIsNilpotent) {
    for (auto p : kSmallPrimes) EXPECT_TRUE(brute_power_p(planar("1", "0", p)).is_zero());
}

TEST(BrutePower, EulerFieldIsFixed) {
    const Derivation d = planar("x", "0", 3);
    EXPECT_EQ(brute_power_p(d), d);
}

TEST(BrutePower, YdxX2dyIsNilpotentAtFive) {
    const Derivation d = planar("y", "x^2", 5);
    const Derivation dp = brute_power_p(d);
    EXPECT_EQ(K("x^2", 5) * dp.coeff(0), K("y", 5) * dp.coeff(1));
    // Oracle (sympy, five-fold application): D^5 vanishes on both variables.
    EXPECT_TRUE(dp.is_zero());
}

TEST(BrutePower, IsADerivation) {
    // D^p obeys Leibniz, so applying it to a product matches the image
    // computed from its coefficients.
    Rng rng(52);
    for (auto p : {2u, 3u}) {
        const PrimeChar ch(p);
        for (int t = 0; t < 10; ++t) {
            const Derivation d = Derivation::planar(gen::random_ratfn(rng, ch, 2, 2, 2), gen::random_ratfn(rng, ch, 2, 2, 2));
            const Derivation dp = brute_power_p(d);
            const RatFn a = gen::random_ratfn(rng, ch, 2, 2, 2);
            const RatFn b = gen::random_ratfn(rng, ch, 2, 2, 2);
            RatFn iter = a * b;
            for (std::uint32_t k = 0; k < p; ++k) iter = apply(d, iter);
            EXPECT_EQ(iter, apply(dp, a * b));
            EXPECT_EQ(apply(dp, a * b), a * apply(dp, b) + b * apply(dp, a));
        }
    }
}

TEST(BruteObstruction, Examples) {
    EXPECT_TRUE(brute_obstruction(planar("y", "x^2", 5)).is_zero());
    EXPECT_TRUE(brute_obstruction(planar("0", "0", 5)).is_zero());
    for (auto p : {2u, 3u, 5u, 7u}) {
        const std::string g = "x^" + std::to_string(p - 1);
        EXPECT_FALSE(brute_obstruction(Derivation::planar(K("1", p), K(g, p))).is_zero()) << p;
    }
    // Oracle: D^p(x) = 0, D^p(y) = (p-1)! = -1.
    EXPECT_EQ(brute_obstruction(planar("1", "x^4", 5)), K("-1", 5));
}

TEST(BruteObstruction, ScalesWithMultiplier) {
    // (bD)^p is parallel to D whenever D^p is, so the verdict is invariant.
    Rng rng(53);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 10; ++t) {
            const PrimeChar ch(p);
            const RatFn f = gen::random_ratfn(rng, ch, 2, 2, 2);
            const RatFn g = gen::random_ratfn(rng, ch, 2, 2, 2);
            const RatFn b = gen::random_nonzero_ratfn(rng, ch, 2, 2, 2);
            const bool closed = brute_obstruction(Derivation::planar(f, g)).is_zero();
            EXPECT_EQ(closed, brute_obstruction(Derivation::planar(b * f, b * g)).is_zero());
        }
}

TEST(ClosureWitness, Examples) {
    const auto euler = closure_witness(planar("x", "0", 3));
    ASSERT_TRUE(euler);
    EXPECT_EQ(euler->a, K("1", 3));
    EXPECT_TRUE(euler->verified);

    const auto dx = closure_witness(planar("1", "0", 3));
    ASSERT_TRUE(dx);
    EXPECT_TRUE(dx->a.is_zero());

    const auto zero = closure_witness(planar("0", "0", 3));
    ASSERT_TRUE(zero);
    EXPECT_TRUE(zero->a.is_zero());

    for (auto p : {2u, 3u, 5u, 7u}) {
        const std::string g = "x^" + std::to_string(p - 1);
        EXPECT_FALSE(closure_witness(Derivation::planar(K("1", p), K(g, p)))) << p;
    }
}

TEST(ClosureWitness, YdxX2dy) {
    const Derivation d = planar("y", "x^2", 5);
    const auto w = closure_witness(d);
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->verified);
    const Derivation dp = brute_power_p(d);
    EXPECT_EQ(dp.coeff(0), w->a * d.coeff(0));
    EXPECT_EQ(dp.coeff(1), w->a * d.coeff(1));
}

TEST(ClosureWitness, AgreesWithObstruction) {
    Rng rng(54);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 20; ++t) {
            const PrimeChar ch(p);
            const Derivation d = Derivation::planar(gen::random_ratfn(rng, ch, 2, 2, 2), gen::random_ratfn(rng, ch, 2, 2, 2));
            EXPECT_EQ(closure_witness(d).has_value(), brute_obstruction(d).is_zero());
        }
}

TEST(ClosureWitness, ThreeVariables) {
    // x d/dx + y d/dy + z d/dz has D^p = D.
    const PrimeChar ch(3);
    const Derivation d({K("x1", 3, 3), K("x2", 3, 3), K("x3", 3, 3)});
    const auto w = closure_witness(d);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->a, RatFn::constant(ch, 3, 1));
}
