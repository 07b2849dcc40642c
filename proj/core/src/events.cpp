// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file events.cpp
//---------------------------------------------------------------------------//
#include "antibunch/events.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <fftw3.h>

#include "antibunch/parallel.hpp"

namespace antibunch::events
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kTraceStream = 0x7472616365;  // "trace"

struct FftwFree
{
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(std::size_t n)
{
    auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (!p)
        throw std::bad_alloc();
    return FftwBuffer(p);
}

//! Backward (synthesis) plan for one segment; created once, executed with
//! the new-array interface from any thread.
fftw_plan segment_plan()
{
    static fftw_plan const plan = [] {
        auto in = make_buffer(kSegmentSamples);
        auto out = make_buffer(kSegmentSamples);
        return fftw_plan_dft_1d(static_cast<int>(kSegmentSamples),
                                in.get(),
                                out.get(),
                                FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }();
    return plan;
}

void check_sampling(double dnu, double dt)
{
    if (!(dt > 0) || !std::isfinite(dt))
        throw ConfigError("dt must be positive");
    if (!(dnu >= 0) || !std::isfinite(dnu))
        throw ConfigError("bandwidth_dnu must be nonnegative");
    if (dnu > 0 && dt > 1.0 / (20.0 * dnu) * (1 + 1e-12))
        throw ConfigError("dt undersamples the band: need dt <= 1/(20 dnu)");
}

std::size_t sample_count(double duration, double dt)
{
    if (!(duration >= 0) || !std::isfinite(duration))
        throw ConfigError("duration must be nonnegative");
    double n = duration / dt;
    return static_cast<std::size_t>(std::ceil(n - 1e-9));
}

//! Thinning of one segment: exact for a piecewise-constant rate. Each
//! segment starts a fresh exponential draw, which memorylessness allows.
void segment_events(std::span<double const> intensity,
                    double t0,
                    double dt,
                    double rate_per_intensity,
                    double jitter,
                    Engine& eng,
                    std::vector<double>& prefix,
                    std::vector<double>& out)
{
    prefix.resize(intensity.size() + 1);
    prefix[0] = 0;
    for (std::size_t k = 0; k < intensity.size(); ++k)
        prefix[k + 1] = prefix[k] + rate_per_intensity * intensity[k] * dt;

    std::exponential_distribution<double> gap(1.0);
    std::size_t first = out.size();
    double total = prefix.back();
    for (double target = gap(eng); target < total; target += gap(eng))
    {
        auto it = std::upper_bound(prefix.begin(), prefix.end(), target);
        auto k = static_cast<std::size_t>(it - prefix.begin()) - 1;
        double frac = (target - prefix[k]) / (prefix[k + 1] - prefix[k]);
        out.push_back(t0 + (static_cast<double>(k) + frac) * dt);
    }
    if (jitter > 0)
    {
        std::normal_distribution<double> noise(0.0, jitter);
        for (auto i = first; i < out.size(); ++i)
            out[i] += noise(eng);
    }
}

void finalize_stream(EventStream& s)
{
    auto& ts = s.timestamps;
    std::sort(ts.begin(), ts.end());
    auto lo = std::lower_bound(ts.begin(), ts.end(), 0.0);
    auto hi = std::lower_bound(ts.begin(), ts.end(), s.duration_s);
    ts.erase(hi, ts.end());
    ts.erase(ts.begin(), lo);
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

void check_rate(double mean_rate, double dt, double jitter)
{
    if (!(mean_rate >= 0) || !std::isfinite(mean_rate))
        throw ConfigError("mean_rate must be nonnegative");
    if (mean_rate * dt > 0.1)
        throw ConfigError("mean_rate too high for dt: need mean_rate * dt <= 0.1");
    if (!(jitter >= 0) || !std::isfinite(jitter))
        throw ConfigError("jitter_sigma must be nonnegative");
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
// INTENSITY
//---------------------------------------------------------------------------//
double IntensityTrace::mean() const
{
    if (samples.empty())
        return 0;
    double s = 0;
    for (double v : samples)
        s += v;
    return s / static_cast<double>(samples.size());
}

void intensity_segment(double dnu,
                       double dt,
                       int n_modes,
                       std::uint64_t seed,
                       std::uint64_t segment,
                       std::span<double> out)
{
    if (out.size() > kSegmentSamples)
        throw ConfigError("segment longer than kSegmentSamples");
    if (n_modes < 1)
        throw ConfigError("n_modes must be positive");

    auto n = static_cast<std::ptrdiff_t>(kSegmentSamples);
    thread_local FftwBuffer spectrum = make_buffer(kSegmentSamples);
    thread_local FftwBuffer field = make_buffer(kSegmentSamples);
    std::fill_n(&spectrum[0][0], 2 * kSegmentSamples, 0.0);

    auto eng = make_engine(seed, kTraceStream, segment);
    double resolution = 1.0 / (static_cast<double>(kSegmentSamples) * dt);
    for (int m = 0; m < n_modes; ++m)
    {
        double nu = (uniform01(eng) - 0.5) * dnu;
        double phase = 2 * pi * uniform01(eng);
        auto bin = static_cast<std::ptrdiff_t>(std::llround(nu / resolution));
        bin = ((bin % n) + n) % n;
        spectrum[bin][0] += std::cos(phase);
        spectrum[bin][1] += std::sin(phase);
    }

    fftw_execute_dft(segment_plan(), spectrum.get(), field.get());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = field[k][0] * field[k][0] + field[k][1] * field[k][1];
}

IntensityTrace generate_intensity(double dnu,
                                  double duration,
                                  double dt,
                                  int n_modes,
                                  std::uint64_t seed)
{
    check_sampling(dnu, dt);
    if (n_modes < 1)
        throw ConfigError("n_modes must be positive");

    IntensityTrace trace;
    trace.dt_s = dt;
    trace.dnu_hz = dnu;
    trace.n_modes = n_modes;
    trace.seed = seed;
    trace.reference_intensity = n_modes;
    trace.samples.resize(sample_count(duration, dt));

    std::size_t segments = (trace.samples.size() + kSegmentSamples - 1) / kSegmentSamples;
    for (std::size_t g = 0; g < segments; ++g)
    {
        std::size_t begin = g * kSegmentSamples;
        std::size_t len = std::min(kSegmentSamples, trace.samples.size() - begin);
        intensity_segment(dnu, dt, n_modes, seed, g,
                          std::span<double>(trace.samples).subspan(begin, len));
    }
    return trace;
}

std::vector<double> intensity_autocorrelation(IntensityTrace const& trace,
                                              std::size_t max_lag)
{
    auto const& x = trace.samples;
    if (x.size() <= max_lag)
        throw ConfigError("trace shorter than requested lag");
    double mean = trace.mean();
    if (!(mean > 0))
        throw NumericalError("autocorrelation of a zero-intensity trace");
    std::vector<double> out(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k)
    {
        double s = 0;
        std::size_t n = x.size() - k;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i] * x[i + k];
        out[k] = s / static_cast<double>(n) / (mean * mean);
    }
    return out;
}

//---------------------------------------------------------------------------//
// EVENTS
//---------------------------------------------------------------------------//
void validate(EventStream const& s)
{
    if (s.detector_id != 1 && s.detector_id != 2)
        throw ConfigError("detector_id must be 1 or 2");
    if (!(s.duration_s >= 0))
        throw ConfigError("duration must be nonnegative");
    for (std::size_t i = 0; i < s.timestamps.size(); ++i)
    {
        double t = s.timestamps[i];
        if (!(t >= 0 && t < s.duration_s))
            throw ConfigError("timestamp outside [0, duration)");
        if (i > 0 && !(t > s.timestamps[i - 1]))
            throw ConfigError("timestamps must be strictly increasing");
    }
}

EventStream generate_events(IntensityTrace const& trace,
                            double mean_rate,
                            double jitter,
                            std::uint64_t seed,
                            int detector_id)
{
    check_rate(mean_rate, trace.dt_s, jitter);
    EventStream stream;
    stream.detector_id = detector_id;
    stream.duration_s = trace.duration_s();

    double reference = trace.reference_intensity > 0 ? trace.reference_intensity
                                                     : trace.mean();
    if (!(reference > 0) || mean_rate == 0)
        return stream;

    std::vector<double> prefix;
    std::size_t segments = (trace.samples.size() + kSegmentSamples - 1) / kSegmentSamples;
    for (std::size_t g = 0; g < segments; ++g)
    {
        std::size_t begin = g * kSegmentSamples;
        std::size_t len = std::min(kSegmentSamples, trace.samples.size() - begin);
        auto eng = make_engine(seed, static_cast<std::uint64_t>(detector_id), g);
        segment_events(std::span<double const>(trace.samples).subspan(begin, len),
                       static_cast<double>(begin) * trace.dt_s,
                       trace.dt_s,
                       mean_rate / reference,
                       jitter,
                       eng,
                       prefix,
                       stream.timestamps);
    }
    finalize_stream(stream);
    return stream;
}

double resolved_dt(HbtEventConfig const& cfg)
{
    if (cfg.dt_s > 0)
        return cfg.dt_s;
    if (!(cfg.dnu_hz > 0))
        throw ConfigError("dt must be given when dnu is zero");
    return 1.0 / (20.0 * cfg.dnu_hz);
}

HbtEventRun simulate_hbt_events(HbtEventConfig const& cfg)
{
    double dt = resolved_dt(cfg);
    check_sampling(cfg.dnu_hz, dt);
    check_rate(cfg.mean_rate_hz, dt, cfg.jitter_sigma_s);
    if (cfg.n_modes < 1)
        throw ConfigError("n_modes must be positive");

    std::size_t n = sample_count(cfg.duration_s, dt);
    std::size_t segments = (n + kSegmentSamples - 1) / kSegmentSamples;
    double duration = static_cast<double>(n) * dt;
    double rate_per_intensity = cfg.mean_rate_hz / cfg.n_modes;

    std::vector<std::array<std::vector<double>, 2>> per_segment(segments);
    parallel_for_index(segments, cfg.workers, [&](std::size_t g) {
        std::size_t begin = g * kSegmentSamples;
        std::size_t len = std::min(kSegmentSamples, n - begin);
        thread_local std::vector<double> intensity;
        thread_local std::vector<double> prefix;
        intensity.resize(len);
        intensity_segment(cfg.dnu_hz, dt, cfg.n_modes, cfg.seed, g, intensity);
        for (int d = 0; d < 2; ++d)
        {
            auto eng = make_engine(cfg.seed, static_cast<std::uint64_t>(d + 1), g);
            segment_events(intensity,
                           static_cast<double>(begin) * dt,
                           dt,
                           rate_per_intensity,
                           cfg.jitter_sigma_s,
                           eng,
                           prefix,
                           per_segment[g][d]);
        }
    });

    HbtEventRun run;
    EventStream* streams[] = {&run.first, &run.second};
    for (int d = 0; d < 2; ++d)
    {
        auto& s = *streams[d];
        s.detector_id = d + 1;
        s.duration_s = duration;
        std::size_t total = 0;
        for (auto const& seg : per_segment)
            total += seg[d].size();
        s.timestamps.reserve(total);
        for (auto const& seg : per_segment)
            s.timestamps.insert(s.timestamps.end(), seg[d].begin(), seg[d].end());
        finalize_stream(s);
    }
    return run;
}

//---------------------------------------------------------------------------//
// HISTOGRAMS
//---------------------------------------------------------------------------//
CoincidenceHistogram coincidence_histogram(EventStream const& s1,
                                           EventStream const& s2,
                                           double bin_width,
                                           double max_lag)
{
    if (!(bin_width > 0) || !std::isfinite(bin_width))
        throw ConfigError("bin_width must be positive");
    if (!(max_lag >= 0) || !std::isfinite(max_lag))
        throw ConfigError("max_lag must be nonnegative");
    if (s1.duration_s != s2.duration_s)
        throw ConfigError("event streams cover different durations");

    auto half = static_cast<std::int64_t>(std::floor(max_lag / bin_width + 1e-9));
    CoincidenceHistogram h;
    h.bin_width_s = bin_width;
    h.duration_s = s1.duration_s;
    for (std::int64_t k = -half; k <= half; ++k)
        h.centers.push_back(static_cast<double>(k) * bin_width);
    h.counts.assign(h.centers.size(), 0);
    if (h.duration_s > 0)
    {
        h.singles_rates = {static_cast<double>(s1.timestamps.size()) / h.duration_s,
                           static_cast<double>(s2.timestamps.size()) / h.duration_s};
    }

    double reach = (static_cast<double>(half) + 0.5) * bin_width;
    auto const& a = s1.timestamps;
    auto const& b = s2.timestamps;
    std::size_t start = 0;
    for (double t1 : a)
    {
        while (start < b.size() && b[start] < t1 - reach)
            ++start;
        for (std::size_t j = start; j < b.size() && b[j] <= t1 + reach; ++j)
        {
            double lag = t1 - b[j];
            auto k = static_cast<std::int64_t>(std::floor(lag / bin_width + 0.5));
            if (k < -half || k > half)
                continue;
            ++h.counts[static_cast<std::size_t>(k + half)];
            ++h.total_pairs;
        }
    }
    return h;
}

CoherenceCurve normalize_histogram(CoincidenceHistogram const& h)
{
    if (!(h.singles_rates[0] > 0) || !(h.singles_rates[1] > 0))
        throw NumericalError("zero singles rate: cannot normalize histogram");
    if (!(h.duration_s > 0))
        throw NumericalError("histogram duration must be positive");

    double accidental = h.singles_rates[0] * h.singles_rates[1] * h.bin_width_s
                        * h.duration_s;
    std::vector<CurvePoint> pts;
    pts.reserve(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i)
    {
        auto c = static_cast<double>(h.counts[i]);
        double err = c > 0 ? std::sqrt(c) : 1.0;
        pts.push_back({h.centers[i], c / accidental, err / accidental, false});
    }
    CurveMetadata meta;
    meta.statistics = ParticleStatistics::boson;
    meta.generator = Generator::event;
    return CoherenceCurve(AxisKind::time_difference_s, std::move(pts), meta);
}

CoherenceCurve synth_fermion_histogram(CoherenceCurve const& boson,
                                       double background_level)
{
    if (!(background_level > 0) || !std::isfinite(background_level))
        throw ConfigError("background_level must be positive");
    std::vector<CurvePoint> pts;
    pts.reserve(boson.size());
    for (auto const& p : boson.points())
    {
        CurvePoint q = p;
        q.g2 = 2 * background_level - p.g2;
        q.flagged = q.g2 < 0 || p.flagged;
        pts.push_back(q);
    }
    CurveMetadata meta = boson.metadata();
    meta.statistics = ParticleStatistics::fermion;
    return CoherenceCurve(boson.axis(), std::move(pts), meta);
}

//---------------------------------------------------------------------------//
// TEXT FORMAT
//---------------------------------------------------------------------------//
void write_events(std::ostream& os, std::span<EventStream const> streams)
{
    double duration = streams.empty() ? 0.0 : streams.front().duration_s;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", duration);
    os << "# antibunch event stream: detector_id timestamp_s\n";
    os << "# duration_s " << buf << '\n';
    for (auto const& s : streams)
    {
        for (double t : s.timestamps)
        {
            std::snprintf(buf, sizeof(buf), "%d %.12f\n", s.detector_id, t);
            os << buf;
        }
    }
}

std::vector<EventStream> read_events(std::istream& is)
{
    std::map<int, EventStream> by_id;
    double duration = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            std::istringstream hs(line.substr(1));
            std::string key;
            double value = 0;
            if (hs >> key >> value && key == "duration_s")
                duration = value;
            continue;
        }
        std::istringstream ls(line);
        int id = 0;
        double t = 0;
        if (!(ls >> id >> t))
            throw ConfigError("events line " + std::to_string(lineno) + ": expected 'id timestamp'");
        auto& s = by_id[id];
        s.detector_id = id;
        s.timestamps.push_back(t);
    }
    if (duration < 0)
        throw ConfigError("event file lacks a '# duration_s' line");

    std::vector<EventStream> out;
    for (auto& [id, s] : by_id)
    {
        s.duration_s = duration;
        validate(s);
        out.push_back(std::move(s));
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::events
