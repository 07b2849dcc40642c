// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/mc.hpp
//! Amplitude-level Monte Carlo estimate of two-particle coherence.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "random.hpp"
#include "types.hpp"

namespace antibunch::mc
{
//---------------------------------------------------------------------------//
using Complex = std::complex<double>;

/*!
 * Monte Carlo run configuration.
 *
 * HBT uses exactly one source; HOM uses two. Each source emits two particle
 * labels (a, b) per realization, each with its own phase set over
 * (sub-source, mode) and its own mode frequencies.
 */
struct McConfig
{
    GeometrySpec geometry;
    std::vector<SourceSpec> sources;
    Polarization polarization{Polarization::parallel};
    std::int64_t n_realizations{20000};
    std::uint64_t seed{kDefaultSeed};
    unsigned workers{0};
    //! Negative control: source 2 reuses source 1's random draws.
    bool shared_source_phases{false};
};

void validate(McConfig const& cfg);

//! Two sources for HOM placed at -d/2 and +d/2 with common size/band.
McConfig make_hom_config(SourceSpec const& source,
                         GeometrySpec const& geometry,
                         Polarization pol);

//---------------------------------------------------------------------------//
/*!
 * Paraxial free-space amplitude from one sub-source and mode to a detector.
 *
 * Phase is phi + 2 pi nu t + k (x_d - x_s)^2 / (2 z) with k = 2 pi / lambda
 * and nu measured from the carrier; the modulus is
 * 1 / sqrt(n_subsources * n_modes).
 */
Complex propagate(double sub_source_x,
                  double emission_phase,
                  double mode_frequency,
                  DetectorSpec const& detector,
                  GeometrySpec const& geometry,
                  SourceSpec const& source);

//! 50:50 splitter coupling: 1/sqrt(2) transmitted (m == j), i/sqrt(2) reflected.
Complex splitter_factor(int source, int detector);

//! Uniform grid of sub-source positions (cell midpoints) across the slit.
std::vector<double> sub_source_positions(SourceSpec const& s);

//---------------------------------------------------------------------------//
struct ParticleState
{
    std::vector<double> phases;  //!< [mode * n_subsources + sub]
    std::vector<double> frequencies;  //!< per mode, offset from carrier
};

//! Particle index p = 2 * source + label, label 0 = a, 1 = b.
struct Realization
{
    std::uint64_t seed{0};
    std::uint64_t index{0};
    std::vector<ParticleState> particles;
};

//! Bit-identical for identical (config, index).
Realization draw_realization(McConfig const& cfg, std::uint64_t index);

struct DetectorPair
{
    DetectorSpec first;
    DetectorSpec second;
};

/*!
 * Complex path amplitudes for one realization and one detector pair.
 *
 * amplitude[p][j] is A for particle p reaching detector j, splitter factor
 * included. pair(m, n) gives u = A_{ma1} A_{nb2} and v = A_{ma2} A_{nb1}.
 */
struct TwoParticleAmplitudeSet
{
    int n_sources{1};
    std::vector<std::array<Complex, 2>> amplitude;

    std::pair<Complex, Complex> pair(int m, int n) const;
};

TwoParticleAmplitudeSet amplitudes(McConfig const& cfg,
                                   Realization const& r,
                                   DetectorPair const& dets);

//---------------------------------------------------------------------------//
//! Per-realization two-particle quantities before averaging.
struct RealizationTerms
{
    double boson{0};  //!< reduced (per source pair) sum
    double fermion{0};
    double classical{0};
    double boson_full{0};  //!< coherent sum over all eight paths
    double fermion_full{0};
    std::array<double, 4> singles{};  //!< I_a1, I_a2, I_b1, I_b2
};

RealizationTerms compose(McConfig const& cfg, TwoParticleAmplitudeSet const& amps);

//---------------------------------------------------------------------------//
struct Estimate
{
    double value{0};
    double stderr_{0};
};

struct PointEstimate
{
    Estimate boson;
    Estimate fermion;
    Estimate classical;
    double normalization{0};

    Estimate const& get(ParticleStatistics s) const;
};

/*!
 * Normalized g2 for all three statistics at each detector pair.
 *
 * Realizations are shared across pairs. G2 is normalized by
 * <I_a1><I_b2> + <I_a2><I_b1> from the same run; stderr is the delta-method
 * standard error of that ratio. Output bits do not depend on worker count.
 */
std::vector<PointEstimate> g2_mc_scan(McConfig const& cfg,
                                      std::span<DetectorPair const> pairs);

Estimate g2_mc(ParticleStatistics stat,
               McConfig const& cfg,
               DetectorSpec const& det1,
               DetectorSpec const& det2);

/*!
 * Scan curve: detector 1 moves along the axis, detector 2 stays at origin.
 */
CoherenceCurve mc_curve(ParticleStatistics stat,
                        McConfig const& cfg,
                        AxisKind axis,
                        std::span<double const> coordinates);

/*!
 * Large-N limit of the MC estimate for the configured discrete slit grid.
 *
 * Ratio of exact expectations; bounds the discretization error without
 * sampling noise.
 */
double discrete_expectation(ParticleStatistics stat,
                            McConfig const& cfg,
                            DetectorPair const& dets);

//---------------------------------------------------------------------------//
//! |u+v|^2 + |u-v|^2 - 2 (|u|^2 + |v|^2); zero up to rounding.
double half_sum_residual(Complex u, Complex v);

struct HalfSumReport
{
    bool ok{true};
    std::int64_t checked{0};
    std::optional<std::int64_t> first_violation;
    double max_relative_residual{0};
};

//! Per-realization G_C = (G_B + G_F) / 2 at relative tolerance 1e-12.
HalfSumReport verify_half_sum(McConfig const& cfg,
                              DetectorPair const& dets,
                              std::int64_t n_realizations);

struct CrossTermReport
{
    struct Comparison
    {
        double full_mean{0};
        double reduced_mean{0};
        double diff_mean{0};
        double diff_stderr{0};
        double z{0};
    };

    Comparison boson;
    Comparison fermion;
    double max_cross_term_z{0};  //!< largest |mean/stderr| of a single cross term
    std::int64_t n_realizations{0};
    bool termwise_identical{false};  //!< true when full == reduced every realization
    bool agrees{false};  //!< both |z| <= 3
    bool violation{false};  //!< any |z| > 5
};

/*!
 * Compare the fully coherent eight-path sum with the per-source-pair sum on
 * shared realizations.
 */
CrossTermReport verify_cross_term_cancellation(McConfig const& cfg,
                                               DetectorPair const& dets);

//---------------------------------------------------------------------------//
}  // namespace antibunch::mc
