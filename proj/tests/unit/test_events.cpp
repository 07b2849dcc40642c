// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_events.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <sstream>

#include <doctest.h>

#include "antibunch/analytic.hpp"
#include "antibunch/events.hpp"

using namespace antibunch;
using namespace antibunch::events;

namespace
{
constexpr double kDnu = 1 / 296e-9;
constexpr double kDt = 296e-9 / 20;
}  // namespace

//---------------------------------------------------------------------------//
TEST_CASE("single-mode intensity is constant")
{
    auto trace = generate_intensity(kDnu, 1e-3, kDt, 1, 7);
    CHECK(trace.samples.size() == static_cast<std::size_t>(std::ceil(1e-3 / kDt - 1e-9)));
    auto [lo, hi] = std::minmax_element(trace.samples.begin(), trace.samples.end());
    CHECK(*lo == doctest::Approx(1).epsilon(1e-12));
    CHECK(*hi == doctest::Approx(1).epsilon(1e-12));
    CHECK(trace.reference_intensity == 1);
}

TEST_CASE("segments are reproducible")
{
    std::vector<double> a(1000), b(1000), c(1000);
    intensity_segment(kDnu, kDt, 16, 3, 5, a);
    intensity_segment(kDnu, kDt, 16, 3, 5, b);
    intensity_segment(kDnu, kDt, 16, 3, 6, c);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(std::all_of(a.begin(), a.end(), [](double v) { return v >= 0; }));
}

TEST_CASE("trace validation")
{
    CHECK_THROWS_WITH_AS(generate_intensity(kDnu, 1e-3, 296e-9 / 10, 8, 1),
                         "dt undersamples the band: need dt <= 1/(20 dnu)", ConfigError);
    CHECK_THROWS_AS(generate_intensity(kDnu, -1, kDt, 8, 1), ConfigError);
    CHECK_THROWS_AS(generate_intensity(kDnu, 1e-3, kDt, 0, 1), ConfigError);
    CHECK(generate_intensity(kDnu, 0, kDt, 8, 1).samples.empty());
}

TEST_CASE("pseudothermal autocorrelation")
{
    int const modes = 512;
    auto trace = generate_intensity(kDnu, 0.2, kDt, modes, 11);
    CHECK(trace.mean() == doctest::Approx(modes).epsilon(0.02));
    auto g = intensity_autocorrelation(trace, 40);
    CHECK(g[0] == doctest::Approx(2.0 - 1.0 / modes).epsilon(0.03));
    for (std::size_t k : {5u, 10u, 15u, 30u})
    {
        double tau = static_cast<double>(k) * kDt;
        double expected = analytic::g2_hbt_temporal(ParticleStatistics::boson, kDnu, tau);
        CHECK(g[k] == doctest::Approx(expected).epsilon(0.03));
    }
    CHECK_THROWS_AS(intensity_autocorrelation(trace, trace.samples.size()), ConfigError);
}

//---------------------------------------------------------------------------//
TEST_CASE("constant intensity gives Poisson arrivals")
{
    double const rate = 50e3;
    auto trace = generate_intensity(kDnu, 2.0, kDt, 1, 5);
    auto s = generate_events(trace, rate, 0, 9);
    CHECK_NOTHROW(validate(s));
    double n = static_cast<double>(s.timestamps.size());
    CHECK(std::abs(n - rate * 2.0) < 4 * std::sqrt(rate * 2.0));

    // Kolmogorov-Smirnov against the exponential, 5% critical value.
    std::vector<double> gaps;
    for (std::size_t i = 1; i < s.timestamps.size(); ++i)
    {
        gaps.push_back(s.timestamps[i] - s.timestamps[i - 1]);
    }
    std::sort(gaps.begin(), gaps.end());
    double m = static_cast<double>(gaps.size());
    double mean_gap = 2.0 / n;
    double d = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i)
    {
        double cdf = 1 - std::exp(-gaps[i] / mean_gap);
        d = std::max({d, cdf - static_cast<double>(i) / m,
                      static_cast<double>(i + 1) / m - cdf});
    }
    CHECK(d < 1.36 / std::sqrt(m));
}

TEST_CASE("event generation limits")
{
    auto trace = generate_intensity(kDnu, 1e-3, kDt, 4, 5);
    CHECK_THROWS_WITH_AS(generate_events(trace, 0.2 / kDt, 0, 1),
                         "mean_rate too high for dt: need mean_rate * dt <= 0.1", ConfigError);
    CHECK_THROWS_AS(generate_events(trace, 1e3, -1, 1), ConfigError);
    auto empty = generate_events(trace, 0, 0, 1);
    CHECK(empty.timestamps.empty());
    CHECK(empty.duration_s == doctest::Approx(trace.duration_s()));
}

TEST_CASE("stream validation")
{
    EventStream s{1, {1e-6, 2e-6}, 1e-3};
    CHECK_NOTHROW(validate(s));
    s.timestamps = {2e-6, 1e-6};
    CHECK_THROWS_AS(validate(s), ConfigError);
    s.timestamps = {1e-6, 1e-6};
    CHECK_THROWS_AS(validate(s), ConfigError);
    s.timestamps = {1e-3};
    CHECK_THROWS_AS(validate(s), ConfigError);
    s.timestamps = {};
    s.detector_id = 3;
    CHECK_THROWS_AS(validate(s), ConfigError);
}

TEST_CASE("streamed simulation equals trace-based generation")
{
    HbtEventConfig cfg;
    cfg.duration_s = 2.5e-3;
    cfg.n_modes = 32;
    cfg.mean_rate_hz = 2e5;
    cfg.seed = 42;
    cfg.workers = 1;
    auto run = simulate_hbt_events(cfg);
    auto trace = generate_intensity(cfg.dnu_hz, cfg.duration_s, resolved_dt(cfg), cfg.n_modes,
                                    cfg.seed);
    auto s1 = generate_events(trace, cfg.mean_rate_hz, cfg.jitter_sigma_s, cfg.seed, 1);
    auto s2 = generate_events(trace, cfg.mean_rate_hz, cfg.jitter_sigma_s, cfg.seed, 2);
    CHECK(run.first.timestamps == s1.timestamps);
    CHECK(run.second.timestamps == s2.timestamps);
    CHECK(run.second.detector_id == 2);

    cfg.workers = 3;
    auto threaded = simulate_hbt_events(cfg);
    CHECK(threaded.first.timestamps == run.first.timestamps);
    CHECK(threaded.second.timestamps == run.second.timestamps);
}

//---------------------------------------------------------------------------//
TEST_CASE("coincidence histogram by hand")
{
    EventStream a{1, {1e-6, 2e-6}, 1e-3};
    EventStream b{2, {1e-6, 1.05e-6, 2.2e-6}, 1e-3};
    auto h = coincidence_histogram(a, b, 61e-9, 3e-6);
    REQUIRE(h.centers.size() == 99);
    auto count_at = [&](int k) { return h.counts[static_cast<std::size_t>(k + 49)]; };
    CHECK(h.centers[49] == 0);
    CHECK(h.centers[50] == doctest::Approx(61e-9));
    CHECK(count_at(0) == 1);
    CHECK(count_at(-1) == 1);
    CHECK(count_at(-3) == 1);
    CHECK(count_at(16) == 2);
    CHECK(count_at(-20) == 1);
    CHECK(h.total_pairs == 6);
    CHECK(h.singles_rates[0] == doctest::Approx(2e3));
    CHECK(h.singles_rates[1] == doctest::Approx(3e3));

    EventStream other{2, {}, 2e-3};
    CHECK_THROWS_AS(coincidence_histogram(a, other), ConfigError);
    CHECK_THROWS_AS(coincidence_histogram(a, b, 0), ConfigError);
}

TEST_CASE("histogram normalization")
{
    CoincidenceHistogram h;
    h.bin_width_s = 50e-9;
    h.centers = {-50e-9, 0, 50e-9};
    h.counts = {100, 0, 400};
    h.duration_s = 10;
    h.singles_rates = {2e3, 1e4};
    // Accidentals per bin: r1 r2 bw T = 10.
    auto c = normalize_histogram(h);
    REQUIRE(c.size() == 3);
    CHECK(c.points()[0].g2 == doctest::Approx(10));
    CHECK(c.points()[0].stderr_ == doctest::Approx(1));
    CHECK(c.points()[1].g2 == 0);
    CHECK(c.points()[1].stderr_ == doctest::Approx(0.1));
    CHECK(c.points()[2].stderr_ == doctest::Approx(2));
    CHECK(c.axis() == AxisKind::time_difference_s);

    h.singles_rates = {0, 1e4};
    CHECK_THROWS_AS(normalize_histogram(h), NumericalError);
}

TEST_CASE("independent Poisson streams give flat accidentals")
{
    auto trace = generate_intensity(kDnu, 2.0, kDt, 1, 3);
    auto s1 = generate_events(trace, 50e3, 0, 3, 1);
    auto s2 = generate_events(trace, 50e3, 0, 3, 2);
    auto curve = normalize_histogram(coincidence_histogram(s1, s2));
    double chi2 = 0;
    for (auto const& p : curve.points())
    {
        chi2 += std::pow((p.g2 - 1) / p.stderr_, 2);
    }
    double dof = static_cast<double>(curve.size());
    CHECK(std::abs(chi2 - dof) < 4 * std::sqrt(2 * dof));
}

TEST_CASE("thermal bunching at zero delay")
{
    HbtEventConfig cfg;
    cfg.duration_s = 10;
    auto run = simulate_hbt_events(cfg);
    auto curve = normalize_histogram(coincidence_histogram(run.first, run.second));
    auto const& mid = curve.points()[curve.size() / 2];
    CHECK(mid.coordinate == 0);
    CHECK(mid.g2 == doctest::Approx(2).epsilon(0.05));
    CHECK(curve.points().front().g2 == doctest::Approx(1).epsilon(0.1));
}

TEST_CASE("zero duration yields empty streams")
{
    HbtEventConfig cfg;
    cfg.duration_s = 0;
    auto run = simulate_hbt_events(cfg);
    CHECK(run.first.timestamps.empty());
    auto h = coincidence_histogram(run.first, run.second);
    CHECK(std::all_of(h.counts.begin(), h.counts.end(), [](auto c) { return c == 0; }));
    CHECK_THROWS_AS(normalize_histogram(h), NumericalError);
}

TEST_CASE("fermion synthesis flags negative bins")
{
    CurveMetadata meta;
    meta.generator = Generator::event;
    meta.statistics = ParticleStatistics::boson;
    CoherenceCurve boson(AxisKind::time_difference_s,
                         {{-1e-7, 1.1, 0.05, false}, {0, 2.1, 0.05, false}}, meta);
    auto f = synth_fermion_histogram(boson, 1.02);
    CHECK(f.points()[0].g2 == doctest::Approx(0.94));
    CHECK_FALSE(f.points()[0].flagged);
    CHECK(f.points()[1].g2 == doctest::Approx(-0.06));
    CHECK(f.points()[1].flagged);
    CHECK(f.points()[1].stderr_ == doctest::Approx(0.05));
    CHECK(f.metadata().statistics == ParticleStatistics::fermion);
    CHECK_THROWS_AS(synth_fermion_histogram(boson, 0), ConfigError);
}

TEST_CASE("event files round trip at picosecond precision")
{
    std::vector<EventStream> streams{{1, {1.5e-9, 0.25, 0.999999999999}, 1.0},
                                     {2, {3.000000000001e-3}, 1.0}};
    std::stringstream ss;
    write_events(ss, streams);
    auto back = read_events(ss);
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
    {
        CHECK(back[i].detector_id == streams[i].detector_id);
        CHECK(back[i].duration_s == 1.0);
        REQUIRE(back[i].timestamps.size() == streams[i].timestamps.size());
        for (std::size_t j = 0; j < back[i].timestamps.size(); ++j)
        {
            CHECK(std::abs(back[i].timestamps[j] - streams[i].timestamps[j]) < 1e-12);
        }
    }
    std::stringstream bad("1 0.5\n");
    CHECK_THROWS_AS(read_events(bad), ConfigError);
}
