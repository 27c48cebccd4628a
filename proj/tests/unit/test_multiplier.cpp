#include "test_util.hpp"

using namespace pclosed;
using namespace pclosed::testing;

namespace {

bool valid_multiplier(const RatFn& a, const std::vector<RatFn>& f) {
    std::vector<RatFn> af;
    for (const RatFn& fi : f) af.push_back(a * fi);
    return !a.is_zero() && divergence(af).is_zero();
}

std::size_t all_top_row(const MultiplierSystem& s) {
    return s.row_of(MultiIndex(s.ch, ExponentVector(s.arity, static_cast<Exponent>(s.ch.value() - 1))));
}

bool row_is_zero(const MultiplierSystem& s, std::size_t r) {
    for (const RatFn& e : s.matrix[r])
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

TEST(Divergence, Examples) {
    EXPECT_EQ(divergence({K("x", 5), K("y", 5)}), K("2", 5));
    EXPECT_TRUE(divergence({K("x", 2), K("y", 2)}).is_zero());
    EXPECT_TRUE(divergence({K("y", 5), K("x^2", 5)}).is_zero());
    EXPECT_ERROR(divergence({}), ErrorCode::EmptyInput);
}

TEST(BuildSystem, Shape) {
    for (auto p : kSmallPrimes)
        for (std::size_t n : {1u, 2u}) {
            std::vector<RatFn> f;
            for (std::size_t i = 0; i < n; ++i) f.push_back(K(i == 0 ? "x + 1" : "x*y", p, n));
            const MultiplierSystem s = build_system(f);
            std::size_t cells = 1;
            for (std::size_t i = 0; i < n; ++i) cells *= p;
            EXPECT_EQ(s.unknowns.size(), cells);
            EXPECT_EQ(s.equations.size(), cells);
            ASSERT_EQ(s.matrix.size(), cells);
            for (const auto& row : s.matrix) EXPECT_EQ(row.size(), cells);
        }
    EXPECT_ERROR(build_system({}), ErrorCode::EmptyInput);
}

TEST(BuildSystem, ConstantCoefficientKernel) {
    // d/dx(a) = 0 forces every a_i with p ∤ i to vanish; only a_0 is free.
    const MultiplierSystem s = build_system({K("1", 5, 1)});
    const auto v = kernel_solve(s.matrix);
    ASSERT_TRUE(v);
    for (std::size_t c = 0; c < v->size(); ++c) EXPECT_EQ((*v)[c].is_zero(), !s.unknowns[c].is_zero());
}

TEST(BuildSystem, XYInCharTwoHasXYInKernel) {
    const MultiplierSystem s = build_system({K("x", 2), K("y", 2)});
    // a = xy sits at unknown (1,1) with root 1.
    std::vector<RatFn> v(s.unknowns.size(), K("0", 2));
    v[s.column_of(MultiIndex(PrimeChar(2), ExponentVector{1, 1}))] = K("1", 2);
    for (const auto& row : s.matrix) {
        RatFn acc = K("0", 2);
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
        EXPECT_TRUE(acc.is_zero());
    }
}

TEST(BuildSystem, TopRowIsZero) {
    Rng rng(61);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 1 + t % 2;
            std::vector<RatFn> f;
            for (std::size_t i = 0; i < n; ++i) f.push_back(gen::random_ratfn(rng, PrimeChar(p), n, 3, 3));
            const MultiplierSystem s = build_system(f);
            EXPECT_TRUE(row_is_zero(s, all_top_row(s)));
        }
}

TEST(FindMultiplier, FastPath) {
    EXPECT_EQ(find_multiplier({K("y", 5), K("x^2", 5)}), K("1", 5));
    EXPECT_EQ(find_multiplier({K("1", 3), K("1", 3)}), K("1", 3));
}

TEST(FindMultiplier, EulerField) {
    for (auto p : kSmallPrimes) {
        const std::vector<RatFn> f{K("x", p), K("y", p)};
        const RatFn a = find_multiplier(f);
        EXPECT_TRUE(valid_multiplier(a, f));
        EXPECT_TRUE(valid_multiplier(K("x*y", p).pow(p - 1), f));
    }
}

TEST(FindMultiplier, NormalizedPolynomialOutput) {
    const RatFn a = find_multiplier({K("x", 5), K("y", 5)});
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.num().leading_coefficient(), 1u);
}

TEST(FindMultiplier, RandomTuples) {
    Rng rng(62);
    for (auto p : kSmallPrimes)
        for (int t = 0; t < 12; ++t) {
            const std::size_t n = 1 + t % 2;
            std::vector<RatFn> f;
            for (std::size_t i = 0; i < n; ++i) f.push_back(gen::random_ratfn(rng, PrimeChar(p), n, 2, 2));
            const RatFn a = find_multiplier(f);
            EXPECT_TRUE(valid_multiplier(a, f));
            EXPECT_EQ(find_multiplier(f), a);
            if (n == 2) EXPECT_TRUE(check_divergence_free(a * f[0], a * f[1]));
        }
}

TEST(FindMultiplier, Errors) { EXPECT_ERROR(find_multiplier({}), ErrorCode::EmptyInput); }
