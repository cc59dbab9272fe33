// SPDX-License-Identifier: BSD-3-Clause
#include <benchmark/benchmark.h>

#include <cmath>

#include "glyphtrace/bezier.hpp"
#include "glyphtrace/demo_data.hpp"
#include "glyphtrace/simplify.hpp"
#include "glyphtrace/spline.hpp"
#include "glyphtrace/trajectory.hpp"

using namespace glyphtrace;

namespace {

Trajectory2 dense_circle(std::size_t n) {
    Trajectory2 t;
    t.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 6.283185307179586 * static_cast<double>(i) / static_cast<double>(n);
        t.points.push_back({std::cos(a), std::sin(a)});
    }
    return t;
}

}  // namespace

static void BM_ResampleByArclength(benchmark::State& state) {
    const Trajectory2 t = dense_circle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resample_by_arclength(t, 64));
    }
}
BENCHMARK(BM_ResampleByArclength)->Arg(1000)->Arg(10000);

static void BM_SimplifyRdp(benchmark::State& state) {
    const Trajectory2 t = dense_circle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simplify_rdp(t, 0.01));
    }
}
BENCHMARK(BM_SimplifyRdp)->Arg(1000)->Arg(10000);

static void BM_InterpolateAndSampleSpline(benchmark::State& state) {
    const Trajectory3 t = demo_biopsy_path(4);
    for (auto _ : state) {
        const SplineCurve c = interpolate_spline(t);
        benchmark::DoNotOptimize(sample_curve(c, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_InterpolateAndSampleSpline)->Arg(400)->Arg(4000);

static void BM_FitBezier(benchmark::State& state) {
    const Trajectory2 t = dense_circle(static_cast<std::size_t>(state.range(0)));
    const double tol = default_fit_tolerance(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_bezier(t, tol));
    }
}
BENCHMARK(BM_FitBezier)->Arg(100)->Arg(1000);
