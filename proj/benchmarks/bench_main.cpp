#include <benchmark/benchmark.h>

#include "recgraph/codes.hpp"
#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"
#include "recgraph/solvers.hpp"

namespace {

using namespace recgraph;

void BM_CodeRoundtrip(benchmark::State& state) {
    for (auto _ : state) {
        for (Nat c = 0; c < 500; ++c) {
            benchmark::DoNotOptimize(codes::encode(codes::decode(c)));
        }
    }
}
BENCHMARK(BM_CodeRoundtrip);

void BM_EtaEval(benchmark::State& state) {
    const auto& binary = machine::registry_get("tree:binary");
    for (auto _ : state) {
        for (Nat c = 0; c < 100; ++c) {
            benchmark::DoNotOptimize(codes::eta_eval(binary, codes::decode(c), 100));
        }
    }
}
BENCHMARK(BM_EtaEval);

void BM_PrefixExtraction(benchmark::State& state) {
    const auto& binary = machine::registry_get("tree:binary");
    auto g = constructions::thm4_graph(binary);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphs::prefix(g, state.range(0), kDefaultBudget));
    }
}
BENCHMARK(BM_PrefixExtraction)->Arg(16)->Arg(48);

void BM_KColorable(benchmark::State& state) {
    const auto& cof = machine::registry_get("cof-minus-1");
    auto f = graphs::prefix(constructions::thm2_graph(cof), 169, kDefaultBudget);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solvers::k_colorable(f, state.range(0)));
    }
}
BENCHMARK(BM_KColorable)->Arg(7)->Arg(8);

void BM_SubgraphEmbedding(benchmark::State& state) {
    const auto& ray0 = machine::registry_get("tree:ray0");
    auto h = graphs::prefix(constructions::ray_triangle_H(), 8, kDefaultBudget);
    auto g = graphs::prefix(constructions::thm7_G(ray0), 20, kDefaultBudget);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solvers::subgraph_embedding(h, g));
    }
}
BENCHMARK(BM_SubgraphEmbedding);

}  // namespace

BENCHMARK_MAIN();
