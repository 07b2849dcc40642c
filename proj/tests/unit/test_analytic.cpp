// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_analytic.cpp
//! Reference values computed independently at 30 digits with mpmath.
//---------------------------------------------------------------------------//
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "antibunch/analytic.hpp"

using namespace antibunch;
using namespace antibunch::analytic;

namespace
{
constexpr auto B = ParticleStatistics::boson;
constexpr auto F = ParticleStatistics::fermion;
constexpr auto C = ParticleStatistics::classical;
constexpr double kLambda = 780e-9;
constexpr double kZ = 0.91;

AnalyticModel hom_model(double d, Polarization pol, ParticleStatistics s = F)
{
    AnalyticModel m;
    m.statistics = s;
    m.geometry = {InterferometerKind::hom, kZ, d};
    m.source.length_m = 0.59e-3;
    m.source.wavelength_m = kLambda;
    m.source.bandwidth_hz = 1 / 296e-9;
    m.polarization = pol;
    return m;
}
}  // namespace

TEST_CASE("sinc and its derivative")
{
    CHECK(sinc(0) == 1);
    CHECK(sinc(std::numbers::pi) == doctest::Approx(0).scale(1));
    CHECK(sinc(1e-5) == doctest::Approx(1 - 1e-10 / 6).epsilon(1e-15));
    CHECK(sinc(0.3) == doctest::Approx(std::sin(0.3) / 0.3).epsilon(1e-15));
    CHECK(sinc_derivative(0) == 0);
    for (double x : {1e-5, 0.2, 1.7, -3.1})
    {
        double h = 1e-6;
        double num = (sinc(x + h) - sinc(x - h)) / (2 * h);
        CHECK(sinc_derivative(x) == doctest::Approx(num).epsilon(1e-8));
    }
}

TEST_CASE("temporal HBT reference values")
{
    CHECK(g2_hbt_temporal(F, 3.378e6, 100e-9)
          == doctest::Approx(0.323347319976094817).epsilon(1e-14));
    CHECK(g2_hbt_temporal(B, 3.378e6, 100e-9)
          == doctest::Approx(2 - 0.323347319976094817).epsilon(1e-14));
    CHECK(g2_hbt_temporal(C, 3.378e6, 100e-9) == 1);
    // First zero at tau = 1/dnu.
    CHECK(g2_hbt_temporal(F, 3.378e6, 1 / 3.378e6) == doctest::Approx(1).epsilon(1e-15));
}

TEST_CASE("spatial HBT reference values")
{
    CHECK(g2_hbt_spatial(F, 0.55e-3, kLambda, kZ, 0.5e-3)
          == doctest::Approx(0.405950953471126873).epsilon(1e-14));
    CHECK(g2_hbt_spatial(F, 0.55e-3, kLambda, kZ, 0) == 0);
    CHECK(g2_hbt_spatial(B, 0.55e-3, kLambda, kZ, 0) == 2);
    // First zero at lambda z / l = 1.290545454... mm.
    CHECK(g2_hbt_spatial(F, 0.55e-3, kLambda, kZ, 1.2905454545454545e-3)
          == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("HOM reference values")
{
    double const dx = 0.1e-3;
    CHECK(g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 5e-3, dx, Polarization::parallel)
          == doctest::Approx(0.373210715947530966).epsilon(1e-13));
    CHECK(g2_hom_spatial(B, 0.59e-3, kLambda, kZ, 5e-3, dx, Polarization::parallel)
          == doctest::Approx(1.626789284052469034).epsilon(1e-13));
    CHECK(g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 5e-3, dx, Polarization::orthogonal)
          == doctest::Approx(0.511262456123047831).epsilon(1e-13));
    CHECK(g2_hom_spatial(C, 0.59e-3, kLambda, kZ, 5e-3, dx, Polarization::parallel) == 1);
}

TEST_CASE("half-sum identity holds pointwise for every closed form")
{
    for (double x : linspace(-3e-3, 3e-3, 101))
    {
        for (auto pol : {Polarization::parallel, Polarization::orthogonal})
        {
            double gb = g2_hom_spatial(B, 0.59e-3, kLambda, kZ, 2e-3, x, pol, 0.8);
            double gf = g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 2e-3, x, pol, 0.8);
            double gc = g2_hom_spatial(C, 0.59e-3, kLambda, kZ, 2e-3, x, pol, 0.8);
            CHECK(gc == doctest::Approx((gb + gf) / 2).epsilon(1e-14));
        }
        double gb = g2_hbt_spatial(B, 0.55e-3, kLambda, kZ, x);
        double gf = g2_hbt_spatial(F, 0.55e-3, kLambda, kZ, x);
        CHECK((gb + gf) / 2 == doctest::Approx(1).epsilon(1e-14));
    }
}

TEST_CASE("curves are even in the scan coordinate")
{
    for (double x : {0.05e-3, 0.3e-3, 1.1e-3, 2.9e-3})
    {
        CHECK(g2_hbt_spatial(F, 0.64e-3, kLambda, kZ, x)
              == g2_hbt_spatial(F, 0.64e-3, kLambda, kZ, -x));
        CHECK(g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 5e-3, x, Polarization::parallel)
              == doctest::Approx(g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 5e-3, -x,
                                                Polarization::parallel))
                     .epsilon(1e-14));
    }
}

TEST_CASE("symmetric HOM sources show no interference")
{
    for (double x : linspace(-3e-3, 3e-3, 301))
    {
        CHECK(std::abs(g2_hom_spatial(F, 0.59e-3, kLambda, kZ, 0, x,
                                      Polarization::parallel) - 1) <= 1e-15);
    }
}

TEST_CASE("beta scales the interference term")
{
    CHECK(g2_hbt_temporal(F, 3.378e6, 0, 0.7) == doctest::Approx(0.3));
    CHECK(g2_hbt_temporal(B, 3.378e6, 0, 0.7) == doctest::Approx(1.7));
}

TEST_CASE("model validation")
{
    auto m = hom_model(5e-3, Polarization::parallel);
    CHECK_NOTHROW(validate(m));
    m.polarization.reset();
    CHECK_THROWS_AS(validate(m), ConfigError);
    m = hom_model(5e-3, Polarization::parallel);
    m.axis = AxisKind::time_difference_s;
    CHECK_THROWS_AS(validate(m), ConfigError);
    m = hom_model(5e-3, Polarization::parallel);
    m.beta = 1.2;
    CHECK_THROWS_AS(validate(m), ConfigError);
}

TEST_CASE("analytic curves carry zero stderr")
{
    auto xs = linspace(-1e-3, 1e-3, 11);
    auto curve = make_curve(hom_model(2e-3, Polarization::parallel), xs);
    CHECK(curve.size() == 11);
    CHECK(curve.metadata().generator == Generator::analytic);
    for (auto const& p : curve.points())
    {
        CHECK(p.stderr_ == 0);
    }
}

TEST_CASE("visibility")
{
    std::vector<double> v{0.5, 1.0, 0.75};
    CHECK(visibility(v) == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(visibility(std::vector<double>{}), ConfigError);
    CHECK_THROWS_AS(visibility(std::vector<double>{-1, 1}), NumericalError);
}

TEST_CASE("HOM minima against a dense-grid oracle")
{
    // Dense grid (600001 points) plus bounded scalar refinement.
    struct Row
    {
        double d_m;
        double minimum;
        double at_m;
    };
    Row const rows[] = {
        {0.5e-3, 0.5616969968, 4.808325e-4},
        {1e-3, 0.2305999284, 3.167238e-4},
        {2e-3, 0.0676254483, 1.723839e-4},
        {5e-3, 0.0113471560, 7.065134e-5},
        {10e-3, 0.0028564185, 3.544884e-5},
    };
    for (auto const& r : rows)
    {
        auto ext = curve_extremum(hom_model(r.d_m, Polarization::parallel), -3e-3, 3e-3,
                                  200001);
        CHECK(ext.g2 == doctest::Approx(r.minimum).epsilon(1e-8));
        CHECK(std::abs(ext.coordinate) == doctest::Approx(r.at_m).epsilon(1e-5));
    }
    CHECK_THROWS_AS(curve_extremum(hom_model(5e-3, Polarization::parallel), 0, 1e-3, 10),
                    ConfigError);
}

TEST_CASE("boson extremum is a maximum")
{
    auto m = hom_model(5e-3, Polarization::parallel, B);
    auto ext = curve_extremum(m, -3e-3, 3e-3, 20001);
    CHECK(ext.g2 == doctest::Approx(2 - 0.0113471560).epsilon(1e-8));
}

TEST_CASE("fermion synthesis from boson and classical curves")
{
    CurveMetadata meta;
    meta.generator = Generator::mc;
    meta.statistics = B;
    CoherenceCurve boson(AxisKind::time_difference_s,
                         {{-1, 1.2, 0.03, false}, {0, 2.1, 0.04, false}, {1, 1.0, 0.0, false}},
                         meta);
    meta.statistics = C;
    CoherenceCurve classical(AxisKind::time_difference_s,
                             {{-1, 1.0, 0.01, false}, {0, 1.0, 0.02, false}, {1, 1.0, 0, false}},
                             meta);
    auto f = synth_fermion_curve(boson, classical);
    REQUIRE(f.size() == 3);
    CHECK(f.points()[0].g2 == doctest::Approx(0.8));
    CHECK(f.points()[1].g2 == doctest::Approx(-0.1));
    CHECK(f.points()[1].flagged);
    CHECK_FALSE(f.points()[0].flagged);
    CHECK(f.points()[1].stderr_ == doctest::Approx(std::sqrt(4 * 0.02 * 0.02 + 0.04 * 0.04)));
    CHECK(f.metadata().statistics == F);

    CoherenceCurve shorter(AxisKind::time_difference_s, {{-1, 1.0, 0.01, false}}, meta);
    CHECK_THROWS_AS(synth_fermion_curve(boson, shorter), ConfigError);
}
