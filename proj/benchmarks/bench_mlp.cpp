// SPDX-License-Identifier: BSD-3-Clause
#include <benchmark/benchmark.h>

#include "glyphtrace/demo_data.hpp"
#include "glyphtrace/mlp.hpp"

using namespace glyphtrace;

namespace {

PairDataset demo_pairs() { return build_pairs(demo_letter_set(3, 8), 64); }

}  // namespace

static void BM_Forward(benchmark::State& state) {
    const MlpModel model = init_mlp(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward(model, {0.3, -0.4}));
    }
}
BENCHMARK(BM_Forward);

static void BM_PairGradient(benchmark::State& state) {
    const MlpModel model = init_mlp(7);
    const PairDataset d = demo_pairs();
    for (auto _ : state) {
        benchmark::DoNotOptimize(pair_cost_and_gradients(model, d.pairs.front()));
    }
}
BENCHMARK(BM_PairGradient);

static void BM_Train(benchmark::State& state) {
    const PairDataset d = demo_pairs();
    TrainConfig cfg;
    cfg.iterations = static_cast<int>(state.range(0));
    cfg.seed = 9;
    for (auto _ : state) {
        auto [model, report] = train(init_mlp(7), d, cfg);
        benchmark::DoNotOptimize(report.final_cost);
    }
}
BENCHMARK(BM_Train)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
