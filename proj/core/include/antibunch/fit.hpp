// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/fit.hpp
//! Weighted nonlinear least-squares fits of the coherence models.
//---------------------------------------------------------------------------//
#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace antibunch::fit
{
//---------------------------------------------------------------------------//
using ParamMap = std::map<std::string, double>;

struct FreeParam
{
    std::string name;
    double initial{0};
    double lower{0};
    double upper{0};
};

/*!
 * What to fit and how.
 *
 * Model parameters: dnu_hz (hbt_temporal), l_m (spatial models), d_m
 * (hom_parallel), beta and background (all). lambda_m and z_m are always
 * fixed for spatial models. Any model parameter not listed as free must
 * appear in fixed_params.
 */
struct FitModelSpec
{
    FitModelId model_id{FitModelId::hbt_temporal};
    ParticleStatistics statistics{ParticleStatistics::fermion};
    ParamMap fixed_params;
    std::vector<FreeParam> free_params;
};

struct FitOptions
{
    int max_iterations{500};
    double step_tolerance{1e-10};
    double cost_tolerance{1e-12};
};

std::vector<std::string> model_parameters(FitModelId id);
std::vector<std::string> geometry_parameters(FitModelId id);

void validate(FitModelSpec const& spec);

//! Sign of the interference term: +1 boson, -1 fermion.
double statistics_sign(ParticleStatistics stat);

/*!
 * Model curve g(x).
 *
 *   hbt_temporal:   bg + s beta S(pi dnu x)
 *   hbt_spatial:    bg + s beta S(pi l x / (lambda z))
 *   hom_orthogonal: bg + s (beta/2) S(pi l x / (lambda z))
 *   hom_parallel:   bg + s (beta/2) S(pi l x / (lambda z)) (1 - cos(2 pi d x / (lambda z)))
 *
 * with S = sinc^2 and s = +1 for bosons, -1 for fermions.
 */
double model_value(FitModelId id, ParticleStatistics stat, ParamMap const& p, double x);

//! Analytic partial derivatives of model_value, one per requested name.
std::vector<double> model_gradient(FitModelId id,
                                   ParticleStatistics stat,
                                   ParamMap const& p,
                                   double x,
                                   std::span<std::string const> names);

/*!
 * Data-driven starting point and bounds for every non-fixed parameter.
 *
 * background: far-range median; beta: feature depth; dnu and l: half-width
 * of the central feature; d: dominant frequency of an even cosine transform
 * of the residual oscillation.
 */
FitModelSpec initialize(FitModelId id,
                        ParticleStatistics stat,
                        CoherenceCurve const& curve,
                        ParamMap const& fixed);

/*!
 * Box-constrained Levenberg-Marquardt with analytic Jacobians.
 *
 * Weighted by 1/stderr^2 when every used point has stderr > 0. Flagged
 * points are skipped. Steps that raise the cost are never accepted.
 * Throws NumericalError for a singular Jacobian and ConfigError when there
 * are too few points.
 */
FitResult fit(CoherenceCurve const& curve,
              FitModelSpec const& spec,
              FitOptions const& options = {});

//---------------------------------------------------------------------------//
struct JacobianReport
{
    bool ok{true};
    double worst_error{0};
    std::string worst_param;
    double worst_coordinate{0};
};

/*!
 * Compare analytic derivatives with central differences (step 1e-6
 * relative) for every model parameter at every probe point.
 *
 * The error is |a - n| / max(|a|, |n|, 1/|p|): relative for significant
 * derivatives, and relative to an O(1) change of g per unit relative change
 * of the parameter otherwise.
 */
JacobianReport jacobian_check(FitModelSpec const& spec,
                              ParamMap const& params,
                              std::span<double const> probe_points,
                              double tolerance = 1e-5);

//! Model value of a fit result at x (fixed and fitted parameters merged).
double evaluate(FitResult const& fit, ParamMap const& fixed, double x);

/*!
 * Visibility of the fitted model (not the data) over the curve's range.
 *
 * Throws ConfigError if the fit did not converge.
 */
double extract_visibility(FitResult const& fit,
                          ParamMap const& fixed,
                          CoherenceCurve const& curve);

//---------------------------------------------------------------------------//
std::string to_json(FitResult const& r);
FitResult fit_result_from_json(std::string_view text);

//---------------------------------------------------------------------------//
}  // namespace antibunch::fit
