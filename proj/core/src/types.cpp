// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file types.cpp
//---------------------------------------------------------------------------//
#include "antibunch/types.hpp"

#include <cmath>
#include <sstream>

namespace antibunch
{
namespace
{
//---------------------------------------------------------------------------//
[[noreturn]] void fail(std::string const& what)
{
    throw ConfigError(what);
}

template<class E, std::size_t N>
E parse_enum(std::string_view s,
             std::pair<std::string_view, E> const (&table)[N],
             char const* what)
{
    for (auto const& [name, value] : table)
    {
        if (s == name)
            return value;
    }
    std::ostringstream os;
    os << "unknown " << what << " '" << s << "' (valid:";
    for (auto const& entry : table)
        os << ' ' << entry.first;
    os << ')';
    fail(os.str());
}

constexpr std::pair<std::string_view, ParticleStatistics> kStatistics[] = {
    {"boson", ParticleStatistics::boson},
    {"fermion", ParticleStatistics::fermion},
    {"classical", ParticleStatistics::classical},
};
constexpr std::pair<std::string_view, InterferometerKind> kKinds[] = {
    {"hbt", InterferometerKind::hbt},
    {"hom", InterferometerKind::hom},
};
constexpr std::pair<std::string_view, Polarization> kPolarizations[] = {
    {"parallel", Polarization::parallel},
    {"orthogonal", Polarization::orthogonal},
};
constexpr std::pair<std::string_view, AxisKind> kAxes[] = {
    {"time_difference_s", AxisKind::time_difference_s},
    {"position_difference_m", AxisKind::position_difference_m},
};
constexpr std::pair<std::string_view, Generator> kGenerators[] = {
    {"analytic", Generator::analytic},
    {"mc", Generator::mc},
    {"event", Generator::event},
};
constexpr std::pair<std::string_view, FitModelId> kFitModels[] = {
    {"hbt_temporal", FitModelId::hbt_temporal},
    {"hbt_spatial", FitModelId::hbt_spatial},
    {"hom_parallel", FitModelId::hom_parallel},
    {"hom_orthogonal", FitModelId::hom_orthogonal},
};

template<class E, std::size_t N>
std::string_view
name_of(E value, std::pair<std::string_view, E> const (&table)[N])
{
    for (auto const& [name, v] : table)
    {
        if (v == value)
            return name;
    }
    return "?";
}

bool finite(double v)
{
    return std::isfinite(v);
}

//---------------------------------------------------------------------------//
}  // namespace

std::string_view to_string(ParticleStatistics s)
{
    return name_of(s, kStatistics);
}
std::string_view to_string(InterferometerKind k)
{
    return name_of(k, kKinds);
}
std::string_view to_string(Polarization p)
{
    return name_of(p, kPolarizations);
}
std::string_view to_string(AxisKind a)
{
    return name_of(a, kAxes);
}
std::string_view to_string(Generator g)
{
    return name_of(g, kGenerators);
}
std::string_view to_string(FitModelId m)
{
    return name_of(m, kFitModels);
}

ParticleStatistics parse_statistics(std::string_view s)
{
    return parse_enum(s, kStatistics, "statistics");
}
InterferometerKind parse_interferometer(std::string_view s)
{
    return parse_enum(s, kKinds, "interferometer");
}
Polarization parse_polarization(std::string_view s)
{
    return parse_enum(s, kPolarizations, "polarization");
}
AxisKind parse_axis(std::string_view s)
{
    return parse_enum(s, kAxes, "axis");
}
Generator parse_generator(std::string_view s)
{
    return parse_enum(s, kGenerators, "generator");
}
FitModelId parse_fit_model(std::string_view s)
{
    return parse_enum(s, kFitModels, "model id");
}

//---------------------------------------------------------------------------//
// COHERENCE CURVE
//---------------------------------------------------------------------------//
CoherenceCurve::CoherenceCurve(AxisKind axis,
                               std::vector<CurvePoint> points,
                               CurveMetadata meta)
    : axis_(axis), points_(std::move(points)), meta_(std::move(meta))
{
    for (std::size_t i = 0; i < points_.size(); ++i)
    {
        auto const& p = points_[i];
        if (!finite(p.coordinate))
            fail("curve coordinate must be finite");
        if (i > 0 && !(p.coordinate > points_[i - 1].coordinate))
            fail("curve coordinates must be strictly increasing");
        if (!finite(p.g2))
            fail("curve g2 must be finite");
        if (!(p.stderr_ >= 0) || !finite(p.stderr_))
            fail("curve stderr must be finite and nonnegative");
        if (meta_.generator == Generator::analytic && p.stderr_ != 0)
            fail("analytic curve must have zero stderr");
    }
}

std::vector<double> CoherenceCurve::coordinates() const
{
    std::vector<double> out;
    out.reserve(points_.size());
    for (auto const& p : points_)
        out.push_back(p.coordinate);
    return out;
}

std::vector<double> CoherenceCurve::values() const
{
    std::vector<double> out;
    out.reserve(points_.size());
    for (auto const& p : points_)
        out.push_back(p.g2);
    return out;
}

//---------------------------------------------------------------------------//
// FIT RESULT
//---------------------------------------------------------------------------//
double FitResult::param(std::string const& name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw std::out_of_range("fit result has no parameter '" + name + "'");
    return it->second;
}

void validate(FitResult const& r)
{
    if (r.converged)
    {
        if (!finite(r.residual_norm))
            fail("converged fit has non-finite residual_norm");
        for (auto const& [name, v] : r.params)
        {
            if (!finite(v))
                fail("converged fit has non-finite parameter " + name);
        }
    }
    if (auto it = r.params.find("beta"); it != r.params.end())
    {
        if (!(it->second >= 0 && it->second <= 1))
            fail("beta must lie in [0, 1]");
    }
    for (char const* name : {"l_m", "dnu_hz"})
    {
        if (auto it = r.params.find(name); it != r.params.end())
        {
            if (!(it->second > 0))
                fail(std::string(name) + " must be positive");
        }
    }
}

//---------------------------------------------------------------------------//
// VALIDATION
//---------------------------------------------------------------------------//
void validate(SourceSpec const& s)
{
    if (!finite(s.length_m) || !(s.length_m > 0))
        fail("length_l must be positive");
    if (!finite(s.center_x_m))
        fail("center_x must be finite");
    if (!finite(s.wavelength_m) || !(s.wavelength_m > 0))
        fail("wavelength_lambda must be positive");
    if (!finite(s.bandwidth_hz) || !(s.bandwidth_hz >= 0))
        fail("bandwidth_dnu must be nonnegative");
    if (s.n_subsources < 1)
        fail("n_subsources must be positive");
    if (s.n_modes < 1)
        fail("n_modes must be positive");
}

void validate_for_mc(SourceSpec const& s)
{
    validate(s);
    if (s.n_subsources < 2)
        fail("n_subsources must be at least 2");
}

void validate(GeometrySpec const& g)
{
    if (!finite(g.z_m) || !(g.z_m > 0))
        fail("z must be positive");
    if (g.kind == InterferometerKind::hom)
    {
        if (!g.d_m)
            fail("d required for HOM");
        if (!finite(*g.d_m) || !(*g.d_m >= 0))
            fail("d must be nonnegative");
    }
    else if (g.d_m)
    {
        fail("d not allowed for HBT");
    }
}

void validate(DetectorSpec const& d)
{
    if (!finite(d.x_m))
        fail("detector x must be finite");
    if (!finite(d.t_s))
        fail("detector t must be finite");
    if (!finite(d.jitter_sigma_s) || !(d.jitter_sigma_s >= 0))
        fail("jitter_sigma must be nonnegative");
}

std::pair<SourceSpec, GeometrySpec>
validate_config(SourceSpec const& source, GeometrySpec const& geometry)
{
    validate(source);
    validate(geometry);
    return {source, geometry};
}

//---------------------------------------------------------------------------//
}  // namespace antibunch
