// SPDX-License-Identifier: BSD-3-Clause
#include <benchmark/benchmark.h>

#include <vector>

#include "glyphtrace/demo_data.hpp"
#include "glyphtrace/gmm.hpp"
#include "glyphtrace/rng.hpp"

using namespace glyphtrace;

namespace {

std::vector<Point2> two_clusters(std::size_t per_cluster) {
    Rng rng(11);
    std::vector<Point2> pts;
    pts.reserve(2 * per_cluster);
    for (std::size_t i = 0; i < per_cluster; ++i) {
        pts.push_back({-5.0 + rng.gaussian(), rng.gaussian()});
        pts.push_back({5.0 + rng.gaussian(), rng.gaussian()});
    }
    return pts;
}

std::vector<Point2> pooled_letters() {
    std::vector<Point2> pts;
    for (const Trajectory2& t : demo_letter_set(3)) {
        pts.insert(pts.end(), t.points.begin(), t.points.end());
    }
    return pts;
}

}  // namespace

static void BM_FitGmmTwoClusters(benchmark::State& state) {
    const auto pts = two_clusters(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto [model, report] = fit_gmm(pts, 2, 5);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_FitGmmTwoClusters)->Arg(200)->Arg(2000);

static void BM_FitGmmLetters(benchmark::State& state) {
    const auto pts = pooled_letters();
    for (auto _ : state) {
        auto [model, report] = fit_gmm(pts, static_cast<int>(state.range(0)), 5);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_FitGmmLetters)->Arg(2)->Arg(10);

static void BM_LogLikelihood(benchmark::State& state) {
    const auto pts = two_clusters(1000);
    auto [model, report] = fit_gmm(pts, 2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_likelihood(model, pts));
    }
}
BENCHMARK(BM_LogLikelihood);
