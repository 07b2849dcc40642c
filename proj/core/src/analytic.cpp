// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file analytic.cpp
//---------------------------------------------------------------------------//
#include "antibunch/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>

namespace antibunch::analytic
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double pi = std::numbers::pi;

void require_finite(std::initializer_list<double> values)
{
    for (double v : values)
    {
        if (!std::isfinite(v))
            throw ConfigError("non-finite input to closed-form g2");
    }
}

void require_positive(double v, char const* name)
{
    if (!(v > 0))
        throw ConfigError(std::string(name) + " must be positive");
}

double spatial_envelope(double l, double lambda, double z, double dx)
{
    double s = sinc(pi * l * dx / (lambda * z));
    return s * s;
}

//---------------------------------------------------------------------------//
}  // namespace

double sinc(double x)
{
    double ax = std::abs(x);
    if (ax < 1e-4)
    {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sinc_derivative(double x)
{
    if (std::abs(x) < 1e-4)
    {
        double x2 = x * x;
        return -x / 3.0 + x * x2 / 30.0;
    }
    return (std::cos(x) - std::sin(x) / x) / x;
}

double compose_from_fermion(ParticleStatistics stat, double g2_fermion)
{
    constexpr double g2_classical = 1.0;
    switch (stat)
    {
        case ParticleStatistics::fermion:
            return g2_fermion;
        case ParticleStatistics::boson:
            return 2.0 * g2_classical - g2_fermion;
        case ParticleStatistics::classical:
            return g2_classical;
    }
    return g2_classical;
}

double g2_hbt_temporal(ParticleStatistics stat, double dnu, double tau, double beta)
{
    require_finite({dnu, tau, beta});
    if (!(dnu >= 0))
        throw ConfigError("bandwidth_dnu must be nonnegative");
    double s = sinc(pi * dnu * tau);
    return compose_from_fermion(stat, 1.0 - beta * s * s);
}

double g2_hbt_spatial(ParticleStatistics stat,
                      double l,
                      double lambda,
                      double z,
                      double dx,
                      double beta)
{
    require_finite({l, lambda, z, dx, beta});
    require_positive(l, "length_l");
    require_positive(lambda, "wavelength_lambda");
    require_positive(z, "z");
    return compose_from_fermion(
        stat, 1.0 - beta * spatial_envelope(l, lambda, z, dx));
}

double g2_hom_spatial(ParticleStatistics stat,
                      double l,
                      double lambda,
                      double z,
                      double d,
                      double dx,
                      Polarization pol,
                      double beta)
{
    require_finite({l, lambda, z, d, dx, beta});
    require_positive(l, "length_l");
    require_positive(lambda, "wavelength_lambda");
    require_positive(z, "z");
    if (!(d >= 0))
        throw ConfigError("d must be nonnegative");

    double s = spatial_envelope(l, lambda, z, dx);
    double fermion = 1.0 - 0.5 * beta * s;
    if (pol == Polarization::parallel)
        fermion += 0.5 * beta * s * std::cos(2 * pi * d * dx / (lambda * z));
    return compose_from_fermion(stat, fermion);
}

//---------------------------------------------------------------------------//
// MODEL
//---------------------------------------------------------------------------//
void validate(AnalyticModel const& m)
{
    validate(m.source);
    validate(m.geometry);
    bool hom = m.geometry.kind == InterferometerKind::hom;
    if (hom && !m.polarization)
        throw ConfigError("polarization required for HOM");
    if (!hom && m.polarization)
        throw ConfigError("polarization only applies to HOM");
    if (!(m.beta >= 0 && m.beta <= 1))
        throw ConfigError("beta must lie in [0, 1]");
    if (hom && m.axis == AxisKind::time_difference_s)
        throw ConfigError("HOM closed form is spatial only");
}

double evaluate(AnalyticModel const& m, double coordinate)
{
    auto const& src = m.source;
    if (m.geometry.kind == InterferometerKind::hom)
    {
        return g2_hom_spatial(m.statistics,
                              src.length_m,
                              src.wavelength_m,
                              m.geometry.z_m,
                              m.geometry.d_m.value_or(0.0),
                              coordinate,
                              m.polarization.value_or(Polarization::parallel),
                              m.beta);
    }
    if (m.axis == AxisKind::time_difference_s)
        return g2_hbt_temporal(m.statistics, src.bandwidth_hz, coordinate, m.beta);
    return g2_hbt_spatial(m.statistics,
                          src.length_m,
                          src.wavelength_m,
                          m.geometry.z_m,
                          coordinate,
                          m.beta);
}

CoherenceCurve make_curve(AnalyticModel const& m,
                          std::span<double const> coordinates)
{
    validate(m);
    std::vector<CurvePoint> pts;
    pts.reserve(coordinates.size());
    for (double x : coordinates)
        pts.push_back({x, evaluate(m, x), 0.0, false});

    CurveMetadata meta;
    meta.statistics = m.statistics;
    meta.geometry = m.geometry;
    meta.source = m.source;
    meta.generator = Generator::analytic;
    return CoherenceCurve(m.axis, std::move(pts), meta);
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> out(n);
    if (n == 1)
    {
        out[0] = lo;
        return out;
    }
    double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

//---------------------------------------------------------------------------//
// VISIBILITY AND EXTREMA
//---------------------------------------------------------------------------//
double visibility(std::span<double const> values)
{
    if (values.empty())
        throw ConfigError("visibility of an empty curve");
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double denom = *hi + *lo;
    if (denom == 0)
        throw NumericalError("visibility undefined when max + min = 0");
    return (*hi - *lo) / denom;
}

double visibility(CoherenceCurve const& curve)
{
    auto v = curve.values();
    return visibility(std::span<double const>(v));
}

Extremum find_extremum(std::function<double(double)> const& f,
                       double lo,
                       double hi,
                       int n_probe,
                       bool minimize)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
        throw ConfigError("scan range must be finite with nonzero width");
    if (n_probe < 2)
        throw ConfigError("n_probe must be at least 2");

    double sign = minimize ? 1.0 : -1.0;
    auto grid = linspace(lo, hi, static_cast<std::size_t>(n_probe));
    std::size_t best = 0;
    double best_val = sign * f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i)
    {
        double v = sign * f(grid[i]);
        if (v < best_val)
        {
            best = i;
            best_val = v;
        }
    }

    // Refine in the unit-normalized bracket so the tolerance is relative to
    // the probe spacing rather than to the coordinate's magnitude.
    double a = grid[best > 0 ? best - 1 : 0];
    double b = grid[best + 1 < grid.size() ? best + 1 : best];
    Extremum out{grid[best], sign * best_val};
    if (b > a)
    {
        auto g = [&](double u) { return sign * f(a + u * (b - a)); };
        constexpr int bits = std::numeric_limits<double>::digits / 2;
        auto [u, v] = boost::math::tools::brent_find_minima(g, 0.0, 1.0, bits);
        if (v < best_val)
            out = {a + u * (b - a), sign * v};
    }
    return out;
}

Extremum curve_extremum(AnalyticModel const& m, double lo, double hi, int n_probe)
{
    validate(m);
    if (n_probe < 100)
        throw ConfigError("n_probe must be at least 100");
    bool minimize = m.statistics != ParticleStatistics::boson;
    return find_extremum(
        [&m](double x) { return evaluate(m, x); }, lo, hi, n_probe, minimize);
}

//---------------------------------------------------------------------------//
// SYNTHESIS
//---------------------------------------------------------------------------//
CoherenceCurve synth_fermion_curve(CoherenceCurve const& boson,
                                   CoherenceCurve const& classical)
{
    if (boson.axis() != classical.axis())
        throw ConfigError("boson and classical curves have different axes");
    if (boson.size() != classical.size())
        throw ConfigError("boson and classical curves have different lengths");

    auto const& bp = boson.points();
    auto const& cp = classical.points();
    std::vector<CurvePoint> out;
    out.reserve(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i)
    {
        if (bp[i].coordinate != cp[i].coordinate)
            throw ConfigError("boson and classical coordinates differ at index "
                              + std::to_string(i));
        CurvePoint p;
        p.coordinate = bp[i].coordinate;
        p.g2 = 2.0 * cp[i].g2 - bp[i].g2;
        p.stderr_ = std::sqrt(4.0 * cp[i].stderr_ * cp[i].stderr_
                              + bp[i].stderr_ * bp[i].stderr_);
        p.flagged = p.g2 < 0 || bp[i].flagged || cp[i].flagged;
        out.push_back(p);
    }

    CurveMetadata meta = boson.metadata();
    meta.statistics = ParticleStatistics::fermion;
    if (classical.metadata().generator != Generator::analytic)
        meta.generator = classical.metadata().generator;
    bool any_err = std::any_of(out.begin(), out.end(), [](auto const& p) {
        return p.stderr_ != 0;
    });
    if (any_err && meta.generator == Generator::analytic)
        meta.generator = Generator::mc;
    return CoherenceCurve(boson.axis(), std::move(out), meta);
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::analytic
