// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/analytic.hpp
//! Closed-form normalized second-order coherence functions.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "types.hpp"

namespace antibunch::analytic
{
//---------------------------------------------------------------------------//
//! sin(x)/x, with sinc(0) = 1 and a series branch for |x| < 1e-4.
double sinc(double x);

//! d/dx sinc(x).
double sinc_derivative(double x);

/*!
 * Compose the g2 of a statistics from the fermion value.
 *
 * Classical particles always give 1, and the boson value follows from
 * g_B = 2 g_C - g_F. Every closed form below is built through this.
 */
double compose_from_fermion(ParticleStatistics stat, double g2_fermion);

//! Temporal HBT: fermion 1 - beta sinc^2(pi dnu tau).
double g2_hbt_temporal(ParticleStatistics stat,
                       double dnu_hz,
                       double tau_s,
                       double beta = 1.0);

//! Spatial HBT: fermion 1 - beta sinc^2(pi l dx / (z lambda)).
double g2_hbt_spatial(ParticleStatistics stat,
                      double l_m,
                      double lambda_m,
                      double z_m,
                      double dx_m,
                      double beta = 1.0);

/*!
 * Spatial HOM with two equal-size thermal sources separated by d.
 *
 * Parallel polarization, fermion:
 *   1 - (beta/2) s + (beta/2) s cos(2 pi d dx / (lambda z)),
 * with s = sinc^2(pi l dx / (lambda z)). Orthogonal polarization makes the
 * cross-source pairs distinguishable, leaving the half-height single dip
 * 1 - (beta/2) s.
 */
double g2_hom_spatial(ParticleStatistics stat,
                      double l_m,
                      double lambda_m,
                      double z_m,
                      double d_m,
                      double dx_m,
                      Polarization pol,
                      double beta = 1.0);

//---------------------------------------------------------------------------//
struct AnalyticModel
{
    ParticleStatistics statistics{ParticleStatistics::fermion};
    GeometrySpec geometry;
    SourceSpec source;
    AxisKind axis{AxisKind::position_difference_m};
    std::optional<Polarization> polarization;  //!< HOM only
    double beta{1.0};
};

void validate(AnalyticModel const& m);

//! g2 at one scan coordinate (time difference or position difference).
double evaluate(AnalyticModel const& m, double coordinate);

//! Evaluate the model at strictly increasing coordinates.
CoherenceCurve make_curve(AnalyticModel const& m,
                          std::span<double const> coordinates);

std::vector<double> linspace(double lo, double hi, std::size_t n);

//---------------------------------------------------------------------------//
//! (max - min) / (max + min) over the values.
double visibility(std::span<double const> values);
double visibility(CoherenceCurve const& curve);

struct Extremum
{
    double coordinate{0};
    double g2{0};
};

/*!
 * Global extremum of a 1-D function on [lo, hi].
 *
 * Dense probing on n_probe uniform points, then Brent refinement inside the
 * bracket around the best probe.
 */
Extremum find_extremum(std::function<double(double)> const& f,
                       double lo,
                       double hi,
                       int n_probe,
                       bool minimize);

/*!
 * Minimum (fermion, classical) or maximum (boson) of an analytic curve.
 *
 * n_probe must be at least 100 and the range must have nonzero width.
 */
Extremum curve_extremum(AnalyticModel const& m, double lo, double hi, int n_probe);

/*!
 * Fermion curve from boson and classical curves on a shared grid.
 *
 * Pointwise g_F = 2 g_C - g_B with stderr sqrt(4 sC^2 + sB^2). Points with
 * g_F < 0 are kept and flagged.
 */
CoherenceCurve synth_fermion_curve(CoherenceCurve const& boson,
                                   CoherenceCurve const& classical);

//---------------------------------------------------------------------------//
}  // namespace antibunch::analytic
