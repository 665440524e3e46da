// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "lss/oracle.hpp"
#include "lss/unary.hpp"
#include "lss/witness.hpp"

namespace {

lss::Automaton bench_nfa(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution arc(0.3);
    std::vector<lss::Transition> t;
    for (lss::State a = 0; a < n; ++a) {
        for (lss::State b = 0; b < n; ++b) {
            for (lss::Symbol s = 0; s < 2; ++s) {
                if (arc(rng)) {
                    t.push_back({a, s, b});
                }
            }
        }
    }
    return lss::Automaton(lss::binary_alphabet(), n, 0, {static_cast<lss::State>(n - 1)}, std::move(t));
}

void BM_Enumerate(benchmark::State& state) {
    const lss::Automaton a = bench_nfa(6, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::oracle::enumerate_accepted(a, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_EnumerateSerial(benchmark::State& state) {
    const lss::Automaton a = bench_nfa(6, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::oracle::enumerate_accepted_serial(a, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_BrutePower(benchmark::State& state) {
    const std::vector<lss::Automaton> pair{lss::mod_counter_dfa(3), lss::tail_dfa(3, 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::oracle::brute_power_lss(pair, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_BrutePowerSerial(benchmark::State& state) {
    const std::vector<lss::Automaton> pair{lss::mod_counter_dfa(3), lss::tail_dfa(3, 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::oracle::brute_power_lss_serial(pair, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_UnaryPair(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::kernels::first_unary_pair(m, m + 1, lss::big_f(m, m + 1) - 1));
    }
}

void BM_UnaryPairSerial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lss::kernels::first_unary_pair_serial(m, m + 1, lss::big_f(m, m + 1) - 1));
    }
}

} // namespace

BENCHMARK(BM_Enumerate)->Arg(12)->Arg(16);
BENCHMARK(BM_EnumerateSerial)->Arg(12)->Arg(16);
BENCHMARK(BM_BrutePower)->Arg(8);
BENCHMARK(BM_BrutePowerSerial)->Arg(8);
BENCHMARK(BM_UnaryPair)->Arg(6)->Arg(8);
BENCHMARK(BM_UnaryPairSerial)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
