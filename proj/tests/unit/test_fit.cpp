// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_fit.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <random>

#include <doctest.h>

#include "antibunch/analytic.hpp"
#include "antibunch/fit.hpp"
#include "antibunch/random.hpp"

using namespace antibunch;
using namespace antibunch::fit;

namespace
{
constexpr auto B = ParticleStatistics::boson;
constexpr auto F = ParticleStatistics::fermion;

ParamMap const kGeom{{"lambda_m", 780e-9}, {"z_m", 0.91}};

struct Truth
{
    FitModelId id;
    ParticleStatistics stat;
    ParamMap params;
    AxisKind axis;
    double range;
};

std::vector<Truth> truths()
{
    return {
        {FitModelId::hbt_temporal, F,
         {{"dnu_hz", 1 / 296e-9}, {"beta", 0.9}, {"background", 1.02}},
         AxisKind::time_difference_s, 1e-6},
        {FitModelId::hbt_temporal, B,
         {{"dnu_hz", 1 / 296e-9}, {"beta", 0.9}, {"background", 1.0}},
         AxisKind::time_difference_s, 1e-6},
        {FitModelId::hbt_spatial, F,
         {{"l_m", 0.55e-3}, {"beta", 1.0}, {"background", 1.0}},
         AxisKind::position_difference_m, 3e-3},
        {FitModelId::hom_orthogonal, F,
         {{"l_m", 0.59e-3}, {"beta", 0.8}, {"background", 1.0}},
         AxisKind::position_difference_m, 3e-3},
        {FitModelId::hom_parallel, F,
         {{"l_m", 0.59e-3}, {"d_m", 2e-3}, {"beta", 1.0}, {"background", 1.0}},
         AxisKind::position_difference_m, 3e-3},
    };
}

ParamMap with_geometry(Truth const& t)
{
    ParamMap p = t.params;
    if (t.id != FitModelId::hbt_temporal)
    {
        p.insert(kGeom.begin(), kGeom.end());
    }
    return p;
}

ParamMap fixed_of(Truth const& t)
{
    return t.id == FitModelId::hbt_temporal ? ParamMap{} : kGeom;
}

CoherenceCurve sample(Truth const& t, int n, double sigma = 0, std::uint64_t trial = 0)
{
    auto p = with_geometry(t);
    auto eng = make_engine(kDefaultSeed, 7, trial);
    std::normal_distribution<double> noise(0, sigma > 0 ? sigma : 1);
    std::vector<CurvePoint> pts;
    for (double x : analytic::linspace(-t.range, t.range, n))
    {
        double g = model_value(t.id, t.stat, p, x);
        if (sigma > 0)
        {
            g += noise(eng);
        }
        pts.push_back({x, g, sigma, false});
    }
    CurveMetadata meta;
    meta.generator = sigma > 0 ? Generator::mc : Generator::analytic;
    meta.statistics = t.stat;
    return CoherenceCurve(t.axis, pts, meta);
}

FitModelSpec perturbed_spec(Truth const& t, double factor)
{
    FitModelSpec spec;
    spec.model_id = t.id;
    spec.statistics = t.stat;
    spec.fixed_params = fixed_of(t);
    for (auto const& [name, v] : t.params)
    {
        double start = name == "background" ? v + 0.05 : v * factor;
        double lo = name == "background" ? 0 : (name == "beta" ? 0 : v / 10);
        double hi = name == "background" ? 2 : (name == "beta" ? 1 : v * 10);
        spec.free_params.push_back({name, std::min(start, hi), lo, hi});
    }
    return spec;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST_CASE("parameter tables")
{
    CHECK(model_parameters(FitModelId::hom_parallel)
          == std::vector<std::string>{"l_m", "d_m", "beta", "background"});
    CHECK(geometry_parameters(FitModelId::hbt_temporal).empty());
    CHECK(statistics_sign(B) == 1);
    CHECK(statistics_sign(F) == -1);
    CHECK_THROWS_AS(statistics_sign(ParticleStatistics::classical), ConfigError);
}

TEST_CASE("model spec validation")
{
    auto spec = perturbed_spec(truths()[2], 1.2);
    CHECK_NOTHROW(validate(spec));
    spec.fixed_params.erase("z_m");
    CHECK_THROWS_AS(validate(spec), ConfigError);
    spec = perturbed_spec(truths()[2], 1.2);
    spec.free_params.pop_back();
    CHECK_THROWS_AS(validate(spec), ConfigError);
    spec = perturbed_spec(truths()[2], 1.2);
    spec.free_params.push_back({"d_m", 1e-3, 0, 1e-2});
    CHECK_THROWS_AS(validate(spec), ConfigError);
}

TEST_CASE("model values match the closed forms")
{
    auto p = with_geometry(truths()[4]);
    for (double x : {0.0, 0.1e-3, 0.7e-3})
    {
        CHECK(model_value(FitModelId::hom_parallel, F, p, x)
              == doctest::Approx(analytic::g2_hom_spatial(F, 0.59e-3, 780e-9, 0.91, 2e-3, x,
                                                          Polarization::parallel))
                     .epsilon(1e-14));
    }
}

//---------------------------------------------------------------------------//
TEST_CASE("gradient examples")
{
    ParamMap p{{"dnu_hz", 3.378e6}, {"beta", 0.7}, {"background", 1}};
    std::vector<std::string> names{"dnu_hz", "beta", "background"};
    auto g0 = model_gradient(FitModelId::hbt_temporal, F, p, 0, names);
    CHECK(g0[0] == 0);
    CHECK(g0[1] == -1);
    CHECK(g0[2] == 1);
    double tau = 120e-9;
    double s = analytic::sinc(std::numbers::pi * 3.378e6 * tau);
    auto gb = model_gradient(FitModelId::hbt_temporal, B, p, tau, names);
    auto gf = model_gradient(FitModelId::hbt_temporal, F, p, tau, names);
    CHECK(gb[1] == doctest::Approx(s * s).epsilon(1e-15));
    CHECK(gf[1] == doctest::Approx(-s * s).epsilon(1e-15));
}

TEST_CASE("analytic Jacobians agree with finite differences")
{
    for (auto const& t : truths())
    {
        auto spec = perturbed_spec(t, 1.0);
        auto probes = analytic::linspace(-t.range, t.range, 41);
        auto rep = jacobian_check(spec, with_geometry(t), probes);
        CHECK_MESSAGE(rep.ok, to_string(t.id), " ", rep.worst_param, " ", rep.worst_error);
        CHECK(rep.worst_error < 1e-5);
    }
}

//---------------------------------------------------------------------------//
TEST_CASE("noiseless round trip from perturbed starts")
{
    for (auto const& t : truths())
    {
        auto curve = sample(t, 121);
        for (double factor : {0.7, 1.3})
        {
            auto r = antibunch::fit::fit(curve, perturbed_spec(t, factor));
            CHECK(r.converged);
            for (auto const& [name, v] : t.params)
            {
                CHECK_MESSAGE(std::abs(r.param(name) - v) <= 1e-6 * std::abs(v),
                              to_string(t.id), " ", name, " ", r.param(name));
            }
            CHECK(r.residual_norm < 1e-8);
        }
    }
}

TEST_CASE("data-driven initialization converges to the truth")
{
    for (auto const& t : truths())
    {
        auto curve = sample(t, 121);
        auto spec = initialize(t.id, t.stat, curve, fixed_of(t));
        CHECK(spec.free_params.size() == t.params.size());
        auto r = antibunch::fit::fit(curve, spec);
        CHECK(r.converged);
        for (auto const& [name, v] : t.params)
        {
            CHECK_MESSAGE(std::abs(r.param(name) - v) <= 1e-6 * std::abs(v),
                          to_string(t.id), " ", name, " ", r.param(name));
        }
    }
}

TEST_CASE("tau_c is reported for temporal fits")
{
    auto t = truths()[0];
    auto r = antibunch::fit::fit(sample(t, 81), perturbed_spec(t, 1.2));
    CHECK(r.param("tau_c_s") == doctest::Approx(296e-9).epsilon(1e-6));
}

TEST_CASE("noise robustness over 100 seeded trials")
{
    for (auto const& t : {truths()[0], truths()[2]})
    {
        int good = 0;
        for (std::uint64_t trial = 0; trial < 100; ++trial)
        {
            auto curve = sample(t, 121, 0.02, trial);
            auto r = antibunch::fit::fit(curve, initialize(t.id, t.stat, curve, fixed_of(t)));
            bool ok = r.converged;
            for (auto const& [name, v] : t.params)
            {
                ok = ok && std::abs(r.param(name) - v) <= 3 * r.param_stderr.at(name);
            }
            good += ok ? 1 : 0;
        }
        CHECK_MESSAGE(good >= 95, to_string(t.id), " ", good);
    }
}

TEST_CASE("fits are deterministic")
{
    auto t = truths()[3];
    auto curve = sample(t, 121, 0.02, 5);
    auto spec = initialize(t.id, t.stat, curve, fixed_of(t));
    CHECK(to_json(antibunch::fit::fit(curve, spec)) == to_json(antibunch::fit::fit(curve, spec)));
}

TEST_CASE("cost never increases")
{
    auto t = truths()[4];
    auto curve = sample(t, 121, 0.02, 9);
    auto spec = perturbed_spec(t, 1.25);
    double start_cost = 0;
    ParamMap p = spec.fixed_params;
    for (auto const& f : spec.free_params)
    {
        p[f.name] = f.initial;
    }
    for (auto const& pt : curve.points())
    {
        start_cost += std::pow((pt.g2 - model_value(t.id, t.stat, p, pt.coordinate)) / 0.02, 2);
    }
    double previous = std::sqrt(start_cost);
    for (int iters : {1, 2, 4, 8, 500})
    {
        FitOptions opt;
        opt.max_iterations = iters;
        auto r = antibunch::fit::fit(curve, spec, opt);
        CHECK(r.residual_norm <= previous);
        previous = r.residual_norm;
    }
}

//---------------------------------------------------------------------------//
TEST_CASE("fit failure modes")
{
    auto t = truths()[2];
    auto curve = sample(t, 121);

    auto spec = perturbed_spec(t, 1.2);
    std::erase_if(spec.free_params, [](FreeParam const& f) { return f.name == "beta"; });
    spec.fixed_params["beta"] = 0;
    CHECK_THROWS_AS(antibunch::fit::fit(curve, spec), NumericalError);

    auto tiny = CoherenceCurve(curve.axis(),
                               {curve.points()[0], curve.points()[1]}, curve.metadata());
    CHECK_THROWS_AS(antibunch::fit::fit(tiny, perturbed_spec(t, 1.2)), ConfigError);

    FitOptions one;
    one.max_iterations = 1;
    auto r = antibunch::fit::fit(curve, perturbed_spec(t, 1.3), one);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);
    CHECK_THROWS_AS(extract_visibility(r, kGeom, curve), ConfigError);
}

TEST_CASE("visibilities of ideal curves")
{
    struct Case
    {
        Truth t;
        double visibility;
    };
    Case const cases[] = {
        {{FitModelId::hbt_spatial, F, {{"l_m", 0.55e-3}, {"beta", 1.0}, {"background", 1.0}},
          AxisKind::position_difference_m, 3e-3},
         1.0},
        {{FitModelId::hbt_spatial, B, {{"l_m", 0.55e-3}, {"beta", 1.0}, {"background", 1.0}},
          AxisKind::position_difference_m, 3e-3},
         1.0 / 3},
        {{FitModelId::hom_orthogonal, F,
          {{"l_m", 0.59e-3}, {"beta", 1.0}, {"background", 1.0}},
          AxisKind::position_difference_m, 3e-3},
         1.0 / 3},
    };
    for (auto const& c : cases)
    {
        auto curve = sample(c.t, 121);
        auto r = antibunch::fit::fit(curve, perturbed_spec(c.t, 1.2));
        REQUIRE(r.converged);
        CHECK(extract_visibility(r, kGeom, curve) == doctest::Approx(c.visibility).epsilon(1e-6));
    }
}

TEST_CASE("fit results round trip through JSON")
{
    auto t = truths()[4];
    auto curve = sample(t, 121, 0.02, 2);
    auto r = antibunch::fit::fit(curve, initialize(t.id, t.stat, curve, fixed_of(t)));
    auto back = fit_result_from_json(to_json(r));
    CHECK(back.model_id == r.model_id);
    CHECK(back.statistics == r.statistics);
    CHECK(back.params == r.params);
    CHECK(back.param_stderr == r.param_stderr);
    CHECK(back.residual_norm == r.residual_norm);
    CHECK(back.iterations == r.iterations);
    CHECK(back.converged == r.converged);
    CHECK(to_json(back) == to_json(r));
    CHECK_THROWS_AS(fit_result_from_json("{"), ConfigError);
}
