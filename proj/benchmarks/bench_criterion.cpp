// Fast criterion against the brute-force oracle, plus the pieces it is built from.
// Inputs are fixed per (p, degree) so runs are comparable.

#include <benchmark/benchmark.h>

#include <vector>

#include "pclosed/pclosed.hpp"
#include "pclosed_cli/generators.hpp"

using namespace pclosed;

namespace {

struct Pair {
    RatFn f, g;
};

std::vector<Pair> corpus(std::uint32_t p, int deg) {
    gen::Rng rng(1000 * p + static_cast<unsigned>(deg));
    const PrimeChar ch(p);
    std::vector<Pair> out;
    for (int i = 0; i < 16; ++i) {
        if (i % 2 == 0) {
            out.push_back({gen::random_ratfn(rng, ch, 2, deg, 2), gen::random_ratfn(rng, ch, 2, deg, 2)});
        } else {
            const auto [f, g] = gen::random_divergence_free(rng, ch, deg, 3);
            out.push_back({f, g});
        }
    }
    return out;
}

void pair_args(benchmark::internal::Benchmark* b) {
    for (int p : {2, 3, 5, 7})
        for (int deg : {2, 3}) b->Args({p, deg});
}

void BM_IsPClosed(benchmark::State& state) {
    const auto inputs = corpus(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    std::size_t k = 0;
    for (auto _ : state) {
        const Pair& in = inputs[k++ % inputs.size()];
        benchmark::DoNotOptimize(is_p_closed(in.f, in.g).p_closed);
    }
}
BENCHMARK(BM_IsPClosed)->Apply(pair_args)->Unit(benchmark::kMicrosecond);

void BM_BruteObstruction(benchmark::State& state) {
    const auto inputs = corpus(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    std::size_t k = 0;
    for (auto _ : state) {
        const Pair& in = inputs[k++ % inputs.size()];
        benchmark::DoNotOptimize(brute_obstruction(Derivation::planar(in.f, in.g)).is_zero());
    }
}
BENCHMARK(BM_BruteObstruction)->Apply(pair_args)->Unit(benchmark::kMicrosecond);

void BM_FindMultiplier(benchmark::State& state) {
    const auto inputs = corpus(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    std::size_t k = 0;
    for (auto _ : state) {
        const Pair& in = inputs[k++ % inputs.size()];
        benchmark::DoNotOptimize(find_multiplier({in.f, in.g}));
    }
}
BENCHMARK(BM_FindMultiplier)->Apply(pair_args)->Unit(benchmark::kMicrosecond);

// The criterion once a multiplier is known.
void BM_RhsObstruction(benchmark::State& state) {
    const auto inputs = corpus(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    std::vector<RatFn> multipliers;
    for (const Pair& in : inputs) multipliers.push_back(find_multiplier({in.f, in.g}));
    std::size_t k = 0;
    for (auto _ : state) {
        const std::size_t i = k++ % inputs.size();
        benchmark::DoNotOptimize(rhs_obstruction(inputs[i].f, inputs[i].g, multipliers[i]));
    }
}
BENCHMARK(BM_RhsObstruction)->Apply(pair_args)->Unit(benchmark::kMicrosecond);

void BM_FastPartialPow(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    gen::Rng rng(p);
    const RatFn b = gen::random_ratfn(rng, PrimeChar(p), 2, 6, 6);
    for (auto _ : state) benchmark::DoNotOptimize(fast_partial_pow(b, Axis::X));
}
BENCHMARK(BM_FastPartialPow)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_IteratedPartial(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    gen::Rng rng(p);
    const RatFn b = gen::random_ratfn(rng, PrimeChar(p), 2, 6, 6);
    for (auto _ : state) benchmark::DoNotOptimize(iterated_partial(b, 0, p - 1));
}
BENCHMARK(BM_IteratedPartial)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_PolyGcd(benchmark::State& state) {
    const PrimeChar ch(5);
    gen::Rng rng(static_cast<unsigned>(state.range(0)));
    const auto deg = static_cast<int>(state.range(0));
    const Poly common = gen::random_nonzero_poly(rng, ch, 2, deg, 6);
    const Poly a = common * gen::random_nonzero_poly(rng, ch, 2, deg, 6);
    const Poly b = common * gen::random_nonzero_poly(rng, ch, 2, deg, 6);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
