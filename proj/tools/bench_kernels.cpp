#include <benchmark/benchmark.h>

#include "bchlab/analysis.hpp"

using namespace bchlab;

namespace {

LinearCodeModel make_model(std::uint64_t q, unsigned m, std::uint64_t delta, int lambda) {
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const ExtensionField>> cache;
    auto key = std::make_pair(q, m);
    if (!cache.count(key)) cache[key] = ExtensionField::build(PrimePower::from_q(q), m);
    auto field = cache[key];
    const std::uint64_t n = (field->size() - 1) / 2;
    return generator_polynomial({n, lambda, delta, 1}, field);
}

void BM_enumeration_serial(benchmark::State& state) {
    LinearCodeModel model = make_model(3, 5, 67, 1);  // [121, 11] at delta = delta_2
    for (auto _ : state) {
        WeightEnumerator W = weight_enumerator_serial(model);
        benchmark::DoNotOptimize(W);
    }
}

void BM_enumeration_openmp(benchmark::State& state) {
    LinearCodeModel model = make_model(3, 5, 67, 1);
    for (auto _ : state) {
        WeightEnumerator W = weight_enumerator_exhaustive(model);
        benchmark::DoNotOptimize(W);
    }
}

void BM_leader_table_serial(benchmark::State& state) {
    const std::uint64_t N = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        LeaderTable t = compute_leader_table(N, 3);
        benchmark::DoNotOptimize(t);
    }
}

void BM_leader_table_openmp(benchmark::State& state) {
    const std::uint64_t N = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        LeaderTable t = compute_leader_table_parallel(N, 3);
        benchmark::DoNotOptimize(t);
    }
}

}  // namespace

BENCHMARK(BM_enumeration_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumeration_openmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_leader_table_serial)->Arg(1594322)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_leader_table_openmp)->Arg(1594322)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
