// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/types.hpp
//! Domain types shared by every module. All quantities are SI.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antibunch
{
//---------------------------------------------------------------------------//
//! Raised for any violated configuration or type invariant.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Raised when a numerical procedure cannot produce a meaningful result.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
/*!
 * Exchange statistics of the particle pair.
 *
 * Selects how the two detection alternatives are composed: amplitudes added
 * (boson), subtracted (fermion), or probabilities added (classical).
 */
enum class ParticleStatistics
{
    boson,
    fermion,
    classical,
};

enum class InterferometerKind
{
    hbt,
    hom,
};

enum class Polarization
{
    parallel,
    orthogonal,
};

enum class AxisKind
{
    time_difference_s,
    position_difference_m,
};

enum class Generator
{
    analytic,
    mc,
    event,
};

std::string_view to_string(ParticleStatistics s);
std::string_view to_string(InterferometerKind k);
std::string_view to_string(Polarization p);
std::string_view to_string(AxisKind a);
std::string_view to_string(Generator g);

ParticleStatistics parse_statistics(std::string_view s);
InterferometerKind parse_interferometer(std::string_view s);
Polarization parse_polarization(std::string_view s);
AxisKind parse_axis(std::string_view s);
Generator parse_generator(std::string_view s);

//---------------------------------------------------------------------------//
//! Thermal source: a uniform slit of width length_m with a rectangular band.
struct SourceSpec
{
    double length_m{0};
    double center_x_m{0};
    double wavelength_m{0};
    double bandwidth_hz{0};
    int n_subsources{200};  //!< MC discretization across the slit
    int n_modes{1};  //!< MC frequency modes per particle

    //! Coherence time under the first-sinc-zero convention.
    double coherence_time_s() const { return 1.0 / bandwidth_hz; }

    bool operator==(SourceSpec const&) const = default;
};

struct GeometrySpec
{
    InterferometerKind kind{InterferometerKind::hbt};
    double z_m{0};  //!< source-to-detector distance, identical for all arms
    std::optional<double> d_m;  //!< HOM only: separation of S1 and image of S2

    bool operator==(GeometrySpec const&) const = default;
};

struct DetectorSpec
{
    double x_m{0};
    double t_s{0};
    double jitter_sigma_s{0};

    bool operator==(DetectorSpec const&) const = default;
};

//---------------------------------------------------------------------------//
struct CurvePoint
{
    double coordinate{0};
    double g2{0};
    double stderr_{0};
    bool flagged{false};  //!< unphysical (e.g. synthesized g2 < 0)

    bool operator==(CurvePoint const&) const = default;
};

struct CurveMetadata
{
    ParticleStatistics statistics{ParticleStatistics::classical};
    GeometrySpec geometry;
    SourceSpec source;
    Generator generator{Generator::analytic};
    std::uint64_t seed{0};

    bool operator==(CurveMetadata const&) const = default;
};

/*!
 * Normalized g2 sampled along a scan coordinate.
 *
 * Coordinates are strictly increasing, stderr is nonnegative and g2 is
 * finite; analytic curves carry zero stderr. Construction enforces all of it.
 */
class CoherenceCurve
{
  public:
    CoherenceCurve() = default;
    CoherenceCurve(AxisKind axis,
                   std::vector<CurvePoint> points,
                   CurveMetadata meta);

    AxisKind axis() const { return axis_; }
    std::vector<CurvePoint> const& points() const { return points_; }
    CurveMetadata const& metadata() const { return meta_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    std::vector<double> coordinates() const;
    std::vector<double> values() const;

    bool operator==(CoherenceCurve const&) const = default;

  private:
    AxisKind axis_{AxisKind::position_difference_m};
    std::vector<CurvePoint> points_;
    CurveMetadata meta_;
};

//---------------------------------------------------------------------------//
enum class FitModelId
{
    hbt_temporal,
    hbt_spatial,
    hom_parallel,
    hom_orthogonal,
};

std::string_view to_string(FitModelId m);
//! Throws ConfigError listing the valid ids.
FitModelId parse_fit_model(std::string_view s);

struct FitResult
{
    FitModelId model_id{FitModelId::hbt_temporal};
    ParticleStatistics statistics{ParticleStatistics::fermion};
    std::map<std::string, double> params;
    std::map<std::string, double> param_stderr;
    double residual_norm{0};
    int iterations{0};
    bool converged{false};
    std::string message;

    double param(std::string const& name) const;
};

//! Checks converged => finite residual/params, beta in [0,1], l and dnu > 0.
void validate(FitResult const& r);

//---------------------------------------------------------------------------//
// VALIDATION
//---------------------------------------------------------------------------//
void validate(SourceSpec const& s);
void validate(GeometrySpec const& g);
void validate(DetectorSpec const& d);

//! Also checks the MC discretization counts.
void validate_for_mc(SourceSpec const& s);

/*!
 * Check every invariant of a source/geometry pair.
 *
 * Returns the pair unchanged; throws ConfigError naming the first violated
 * invariant otherwise.
 */
std::pair<SourceSpec, GeometrySpec>
validate_config(SourceSpec const& source, GeometrySpec const& geometry);

//---------------------------------------------------------------------------//
}  // namespace antibunch
