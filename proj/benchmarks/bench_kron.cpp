#include <benchmark/benchmark.h>

#include "kron/blasiak.hpp"
#include "kron/conversion.hpp"
#include "kron/oracle.hpp"
#include "kron/partition.hpp"
#include "kron/stability.hpp"

namespace {

void BM_PartitionsOf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto all = kron::partitions_of(n);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_PartitionsOf)->Arg(10)->Arg(20)->Arg(30);

void BM_CharacterTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto shapes = kron::partitions_of(n);
    for (auto _ : state) {
        kron::character_cache cache;  // cold cache each iteration
        long long sum = 0;
        for (const auto& shape : shapes)
            for (const auto& rho : shapes)
                sum += kron::character(shape, rho, cache);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10);

void BM_KroneckerOracle(benchmark::State& state) {
    kron::character_cache cache;
    const kron::partition lambda({3, 3, 3});
    const kron::partition hook = kron::make_hook(9, 4);
    const kron::partition nu({5, 2, 1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron::kronecker_oracle(lambda, hook, nu, cache));
    }
}
BENCHMARK(BM_KroneckerOracle);

void BM_HookKronecker(benchmark::State& state) {
    const kron::coefficient_query q{kron::partition({3, 3, 3}), 4,
                                    kron::partition({5, 2, 1, 1})};
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron::hook_kronecker(q));
    }
}
BENCHMARK(BM_HookKronecker);

void BM_Decompose(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto expansion = kron::decompose_hook_rect(2, 5, d);
        benchmark::DoNotOptimize(expansion);
    }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(5);

void BM_ConversionRoundTrip(benchmark::State& state) {
    // The worked five-step example chain.
    const kron::colored_tableau t_small = kron::parse_tableau(
        "1~ 2~ 3~ 1\n1~ 3~ 4~ 2\n2~ 1 1 3\n1 2 4\n3 5\n", kron::order::small_bar);
    for (auto _ : state) {
        auto forward = kron::to_natural(t_small);
        auto back = kron::to_small_bar(forward.first);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_ConversionRoundTrip);

void BM_VerifyStability(benchmark::State& state) {
    for (auto _ : state) {
        auto report = kron::verify_stability(2, 1, 3);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyStability);

}  // namespace

BENCHMARK_MAIN();
