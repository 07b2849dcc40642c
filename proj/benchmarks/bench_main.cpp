// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bench_main.cpp
//---------------------------------------------------------------------------//
#include <benchmark/benchmark.h>

#include "antibunch/analytic.hpp"
#include "antibunch/events.hpp"
#include "antibunch/fit.hpp"
#include "antibunch/mc.hpp"

using namespace antibunch;

namespace
{
SourceSpec slit(int n_sub, int n_modes)
{
    SourceSpec s;
    s.length_m = 0.55e-3;
    s.wavelength_m = 780e-9;
    s.bandwidth_hz = 1 / 296e-9;
    s.n_subsources = n_sub;
    s.n_modes = n_modes;
    return s;
}

//---------------------------------------------------------------------------//
void BM_mc_spatial_scan(benchmark::State& state)
{
    mc::McConfig cfg;
    cfg.geometry = {InterferometerKind::hbt, 0.91, std::nullopt};
    cfg.sources = {slit(static_cast<int>(state.range(0)), 1)};
    cfg.n_realizations = 2000;
    cfg.workers = 1;
    auto xs = analytic::linspace(-3e-3, 3e-3, 21);
    for (auto _ : state)
    {
        auto curve = mc::mc_curve(ParticleStatistics::fermion, cfg,
                                  AxisKind::position_difference_m, xs);
        benchmark::DoNotOptimize(curve);
    }
    state.SetItemsProcessed(state.iterations() * cfg.n_realizations);
}
BENCHMARK(BM_mc_spatial_scan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_intensity_segment(benchmark::State& state)
{
    std::vector<double> out(events::kSegmentSamples);
    std::uint64_t segment = 0;
    for (auto _ : state)
    {
        events::intensity_segment(1 / 296e-9, 296e-9 / 20, static_cast<int>(state.range(0)),
                                  1, segment++, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}
BENCHMARK(BM_intensity_segment)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_hbt_events(benchmark::State& state)
{
    events::HbtEventConfig cfg;
    cfg.duration_s = 0.1;
    cfg.workers = 1;
    for (auto _ : state)
    {
        auto run = events::simulate_hbt_events(cfg);
        auto h = events::coincidence_histogram(run.first, run.second);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_hbt_events)->Unit(benchmark::kMillisecond);

void BM_fit_hom_parallel(benchmark::State& state)
{
    fit::ParamMap truth{{"lambda_m", 780e-9}, {"z_m", 0.91},  {"l_m", 0.59e-3},
                        {"d_m", 2e-3},        {"beta", 1.0},  {"background", 1.0}};
    std::vector<CurvePoint> pts;
    for (double x : analytic::linspace(-3e-3, 3e-3, 121))
    {
        pts.push_back({x,
                       fit::model_value(FitModelId::hom_parallel, ParticleStatistics::fermion,
                                        truth, x),
                       0, false});
    }
    CurveMetadata meta;
    meta.statistics = ParticleStatistics::fermion;
    CoherenceCurve curve(AxisKind::position_difference_m, pts, meta);
    fit::ParamMap geom{{"lambda_m", 780e-9}, {"z_m", 0.91}};
    for (auto _ : state)
    {
        auto spec = fit::initialize(FitModelId::hom_parallel, ParticleStatistics::fermion,
                                    curve, geom);
        auto r = fit::fit(curve, spec);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_fit_hom_parallel)->Unit(benchmark::kMicrosecond);
}  // namespace
BENCHMARK_MAIN();
