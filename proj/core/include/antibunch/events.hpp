// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/events.hpp
//! Detection-event simulation of a pseudothermal HBT measurement.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "random.hpp"
#include "types.hpp"

namespace antibunch::events
{
//---------------------------------------------------------------------------//
//! Samples per independently seeded trace segment.
inline constexpr std::size_t kSegmentSamples = std::size_t{1} << 16;

inline constexpr double kDefaultBinWidth = 61e-9;
inline constexpr double kDefaultMaxLag = 3e-6;
inline constexpr double kDefaultJitter = 0.45e-9;

/*!
 * Sampled intensity of a pseudothermal field.
 *
 * reference_intensity is the expected mean (n_modes for generated traces);
 * event rates are scaled against it so a trace and its segments agree.
 */
struct IntensityTrace
{
    double dt_s{0};
    std::vector<double> samples;
    double dnu_hz{0};
    int n_modes{0};
    std::uint64_t seed{0};
    double reference_intensity{0};

    double duration_s() const { return dt_s * static_cast<double>(samples.size()); }
    double mean() const;
};

/*!
 * Fill one segment of |sum of unit phasors|^2.
 *
 * The segment draws n_modes frequencies uniformly in the band (quantized to
 * the segment's frequency resolution) with independent uniform phases, all
 * from (seed, segment). out.size() may be shorter than kSegmentSamples.
 */
void intensity_segment(double dnu_hz,
                       double dt_s,
                       int n_modes,
                       std::uint64_t seed,
                       std::uint64_t segment,
                       std::span<double> out);

//! Rejects dt > 1/(20 dnu).
IntensityTrace generate_intensity(double dnu_hz,
                                  double duration_s,
                                  double dt_s,
                                  int n_modes,
                                  std::uint64_t seed);

//! Normalized autocorrelation <I(t) I(t + k dt)> / <I>^2 for k in [0, max_lag].
std::vector<double> intensity_autocorrelation(IntensityTrace const& trace,
                                              std::size_t max_lag_samples);

//---------------------------------------------------------------------------//
struct EventStream
{
    int detector_id{1};
    std::vector<double> timestamps;  //!< strictly increasing, in [0, duration)
    double duration_s{0};
};

void validate(EventStream const& s);

/*!
 * Doubly stochastic point process driven by a trace.
 *
 * Rate is mean_rate * I / reference_intensity, piecewise constant per sample.
 * Gaussian timing jitter is added afterwards and the stream re-sorted; events
 * pushed outside [0, duration) are dropped.
 */
EventStream generate_events(IntensityTrace const& trace,
                            double mean_rate_hz,
                            double jitter_sigma_s,
                            std::uint64_t seed,
                            int detector_id = 1);

//---------------------------------------------------------------------------//
struct HbtEventConfig
{
    double dnu_hz{1.0 / 296e-9};
    double duration_s{50.0};
    double dt_s{0};  //!< 0 selects 1/(20 dnu)
    int n_modes{512};
    double mean_rate_hz{50e3};  //!< per detector
    double jitter_sigma_s{kDefaultJitter};
    std::uint64_t seed{kDefaultSeed};
    unsigned workers{0};
};

double resolved_dt(HbtEventConfig const& cfg);

struct HbtEventRun
{
    EventStream first;
    EventStream second;
};

/*!
 * Both detector streams of an HBT run without storing the full trace.
 *
 * Identical to generate_intensity + generate_events on each detector with the
 * same seed, segment by segment.
 */
HbtEventRun simulate_hbt_events(HbtEventConfig const& cfg);

//---------------------------------------------------------------------------//
struct CoincidenceHistogram
{
    double bin_width_s{kDefaultBinWidth};
    std::vector<double> centers;  //!< t1 - t2, symmetric about 0
    std::vector<std::int64_t> counts;
    std::int64_t total_pairs{0};
    std::array<double, 2> singles_rates{};
    double duration_s{0};
};

/*!
 * Count pairs with t1 - t2 in bins of width bin_width centered on multiples
 * of bin_width, out to +/- max_lag. Empty streams give an all-zero histogram.
 */
CoincidenceHistogram coincidence_histogram(EventStream const& s1,
                                           EventStream const& s2,
                                           double bin_width_s = kDefaultBinWidth,
                                           double max_lag_s = kDefaultMaxLag);

/*!
 * g2 = count / (r1 r2 bin_width duration) with Poisson error sqrt(count)
 * scaled the same way. A zero-count bin reports the one-count bound.
 */
CoherenceCurve normalize_histogram(CoincidenceHistogram const& h);

/*!
 * g_F = 2 background - g_B pointwise; bins below zero are flagged so fits
 * skip them.
 */
CoherenceCurve synth_fermion_histogram(CoherenceCurve const& boson,
                                       double background_level = 1.0);

//---------------------------------------------------------------------------//
// TEXT FORMAT: "detector_id timestamp_s" per line, timestamps at 1 ps.
//---------------------------------------------------------------------------//
void write_events(std::ostream& os, std::span<EventStream const> streams);

//! Streams in detector-id order; duration taken from the "# duration_s" line.
std::vector<EventStream> read_events(std::istream& is);

//---------------------------------------------------------------------------//
}  // namespace antibunch::events
