// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mc.cpp
//---------------------------------------------------------------------------//
#include "antibunch/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antibunch/analytic.hpp"
#include "antibunch/parallel.hpp"

namespace antibunch::mc
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double pi = std::numbers::pi;
constexpr std::size_t kChunk = 128;
constexpr int kNumVars = 7;  // G_B, G_F, G_C, I_a1, I_a2, I_b1, I_b2

int n_particles(McConfig const& cfg)
{
    return 2 * static_cast<int>(cfg.sources.size());
}

//! Free-space propagator table for one source and one detector position.
std::vector<Complex> propagator_row(SourceSpec const& src,
                                    GeometrySpec const& geo,
                                    double detector_x)
{
    auto xs = sub_source_positions(src);
    double k = 2 * pi / src.wavelength_m;
    double norm = 1.0 / std::sqrt(static_cast<double>(src.n_subsources)
                                  * static_cast<double>(src.n_modes));
    std::vector<Complex> row(xs.size());
    for (std::size_t s = 0; s < xs.size(); ++s)
    {
        double dx = detector_x - xs[s];
        row[s] = std::polar(norm, k * dx * dx / (2 * geo.z_m));
    }
    return row;
}

//! Unit phasors exp(i phi) of one particle, laid out like ParticleState.
std::vector<Complex> phasors(ParticleState const& state)
{
    std::vector<Complex> w(state.phases.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::polar(1.0, state.phases[i]);
    return w;
}

//! Amplitude of one particle at a detector, splitter excluded.
Complex particle_amplitude(std::vector<Complex> const& w,
                           ParticleState const& state,
                           std::vector<Complex> const& row,
                           double t)
{
    std::size_t n_sub = row.size();
    Complex total{0, 0};
    for (std::size_t mode = 0; mode < state.frequencies.size(); ++mode)
    {
        Complex const* wm = w.data() + mode * n_sub;
        Complex acc{0, 0};
        for (std::size_t s = 0; s < n_sub; ++s)
            acc += wm[s] * row[s];
        total += acc * std::polar(1.0, 2 * pi * state.frequencies[mode] * t);
    }
    return total;
}

//! Detector table shared by every realization of a scan.
struct DetectorTable
{
    std::vector<DetectorSpec> detectors;
    std::vector<std::array<std::size_t, 2>> pair_index;
    // rows[source][detector]
    std::vector<std::vector<std::vector<Complex>>> rows;
};

DetectorTable build_table(McConfig const& cfg, std::span<DetectorPair const> pairs)
{
    DetectorTable table;
    auto find_or_add = [&](DetectorSpec const& d) {
        for (std::size_t i = 0; i < table.detectors.size(); ++i)
        {
            if (table.detectors[i].x_m == d.x_m && table.detectors[i].t_s == d.t_s)
                return i;
        }
        table.detectors.push_back(d);
        return table.detectors.size() - 1;
    };
    for (auto const& p : pairs)
        table.pair_index.push_back({find_or_add(p.first), find_or_add(p.second)});

    table.rows.resize(cfg.sources.size());
    for (std::size_t m = 0; m < cfg.sources.size(); ++m)
    {
        for (auto const& d : table.detectors)
            table.rows[m].push_back(propagator_row(cfg.sources[m], cfg.geometry, d.x_m));
    }
    return table;
}

//! amp[p][det] for every particle and every table detector.
std::vector<std::vector<Complex>>
all_amplitudes(McConfig const& cfg, Realization const& r, DetectorTable const& table)
{
    std::vector<std::vector<Complex>> amp(r.particles.size());
    for (std::size_t p = 0; p < r.particles.size(); ++p)
    {
        auto const& state = r.particles[p];
        auto w = phasors(state);
        std::size_t m = p / 2;
        amp[p].resize(table.detectors.size());
        for (std::size_t d = 0; d < table.detectors.size(); ++d)
        {
            amp[p][d] = particle_amplitude(
                w, state, table.rows[m][d], table.detectors[d].t_s);
        }
    }
    (void)cfg;
    return amp;
}

TwoParticleAmplitudeSet pick(std::vector<std::vector<Complex>> const& amp,
                             std::array<std::size_t, 2> const& dets)
{
    TwoParticleAmplitudeSet set;
    set.n_sources = static_cast<int>(amp.size() / 2);
    set.amplitude.resize(amp.size());
    for (std::size_t p = 0; p < amp.size(); ++p)
    {
        int m = static_cast<int>(p / 2);
        for (int j = 0; j < 2; ++j)
            set.amplitude[p][j] = splitter_factor(m, j) * amp[p][dets[j]];
    }
    return set;
}

//---------------------------------------------------------------------------//
//! First and second raw moments of the per-realization variables.
struct Moments
{
    double n{0};
    std::array<double, kNumVars> sum{};
    std::array<double, kNumVars * kNumVars> cross{};

    void add(RealizationTerms const& t)
    {
        std::array<double, kNumVars> x{t.boson,
                                       t.fermion,
                                       t.classical,
                                       t.singles[0],
                                       t.singles[1],
                                       t.singles[2],
                                       t.singles[3]};
        n += 1;
        for (int i = 0; i < kNumVars; ++i)
        {
            sum[i] += x[i];
            for (int j = i; j < kNumVars; ++j)
                cross[i * kNumVars + j] += x[i] * x[j];
        }
    }

    void merge(Moments const& o)
    {
        n += o.n;
        for (int i = 0; i < kNumVars; ++i)
            sum[i] += o.sum[i];
        for (std::size_t i = 0; i < cross.size(); ++i)
            cross[i] += o.cross[i];
    }
};

PointEstimate finish(Moments const& mom)
{
    double n = mom.n;
    std::array<double, kNumVars> mean{};
    for (int i = 0; i < kNumVars; ++i)
        mean[i] = mom.sum[i] / n;
    auto cov = [&](int i, int j) {
        if (i > j)
            std::swap(i, j);
        return (mom.cross[i * kNumVars + j] - n * mean[i] * mean[j]) / (n - 1);
    };

    double norm = mean[3] * mean[6] + mean[4] * mean[5];
    if (!(norm >= 1e-30))
        throw NumericalError("degenerate normalization: singles average below 1e-30");

    PointEstimate out;
    out.normalization = norm;
    Estimate* targets[3] = {&out.boson, &out.fermion, &out.classical};
    for (int s = 0; s < 3; ++s)
    {
        double g = mean[s] / norm;
        // Influence of each variable on g = <G> / (<Ia1><Ib2> + <Ia2><Ib1>).
        std::array<double, kNumVars> w{};
        w[s] = 1.0 / norm;
        w[3] = -g * mean[6] / norm;
        w[6] = -g * mean[3] / norm;
        w[4] = -g * mean[5] / norm;
        w[5] = -g * mean[4] / norm;
        double var = 0;
        for (int i = 0; i < kNumVars; ++i)
        {
            if (w[i] == 0)
                continue;
            for (int j = 0; j < kNumVars; ++j)
            {
                if (w[j] != 0)
                    var += w[i] * w[j] * cov(i, j);
            }
        }
        targets[s]->value = g;
        targets[s]->stderr_ = std::sqrt(std::max(var, 0.0) / n);
    }
    return out;
}

std::size_t n_chunks(std::int64_t n)
{
    return (static_cast<std::size_t>(n) + kChunk - 1) / kChunk;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
// CONFIGURATION
//---------------------------------------------------------------------------//
void validate(McConfig const& cfg)
{
    validate(cfg.geometry);
    std::size_t expected = cfg.geometry.kind == InterferometerKind::hbt ? 1 : 2;
    if (cfg.sources.size() != expected)
    {
        throw ConfigError(cfg.geometry.kind == InterferometerKind::hbt
                              ? "HBT requires exactly one source"
                              : "HOM requires exactly two sources");
    }
    for (auto const& s : cfg.sources)
        validate_for_mc(s);
    if (cfg.sources.size() == 2 && cfg.sources[0].wavelength_m != cfg.sources[1].wavelength_m)
        throw ConfigError("HOM sources must share a wavelength");
    if (cfg.n_realizations < 100)
        throw ConfigError("n_realizations must be at least 100");
    if (cfg.polarization == Polarization::orthogonal
        && cfg.geometry.kind != InterferometerKind::hom)
    {
        throw ConfigError("orthogonal polarization only applies to HOM");
    }
    if (cfg.shared_source_phases)
    {
        if (cfg.sources.size() != 2)
            throw ConfigError("shared_source_phases needs two sources");
        if (cfg.sources[0].n_subsources != cfg.sources[1].n_subsources
            || cfg.sources[0].n_modes != cfg.sources[1].n_modes)
        {
            throw ConfigError("shared_source_phases needs identical discretization");
        }
    }
}

McConfig make_hom_config(SourceSpec const& source,
                         GeometrySpec const& geometry,
                         Polarization pol)
{
    validate(geometry);
    if (geometry.kind != InterferometerKind::hom)
        throw ConfigError("make_hom_config needs a HOM geometry");
    McConfig cfg;
    cfg.geometry = geometry;
    cfg.polarization = pol;
    SourceSpec s1 = source;
    SourceSpec s2 = source;
    s1.center_x_m = source.center_x_m - 0.5 * *geometry.d_m;
    s2.center_x_m = source.center_x_m + 0.5 * *geometry.d_m;
    cfg.sources = {s1, s2};
    return cfg;
}

//---------------------------------------------------------------------------//
// PROPAGATION
//---------------------------------------------------------------------------//
Complex propagate(double sub_source_x,
                  double emission_phase,
                  double mode_frequency,
                  DetectorSpec const& detector,
                  GeometrySpec const& geometry,
                  SourceSpec const& source)
{
    double k = 2 * pi / source.wavelength_m;
    double dx = detector.x_m - sub_source_x;
    double phase = emission_phase + 2 * pi * mode_frequency * detector.t_s
                   + k * dx * dx / (2 * geometry.z_m);
    double modulus = 1.0 / std::sqrt(static_cast<double>(source.n_subsources)
                                     * static_cast<double>(source.n_modes));
    return std::polar(modulus, phase);
}

Complex splitter_factor(int source, int detector)
{
    constexpr double r = std::numbers::sqrt2 / 2;
    return source == detector ? Complex{r, 0} : Complex{0, r};
}

std::vector<double> sub_source_positions(SourceSpec const& s)
{
    std::vector<double> xs(static_cast<std::size_t>(s.n_subsources));
    double cell = s.length_m / static_cast<double>(s.n_subsources);
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        xs[i] = s.center_x_m - 0.5 * s.length_m
                + (static_cast<double>(i) + 0.5) * cell;
    }
    return xs;
}

//---------------------------------------------------------------------------//
// REALIZATIONS
//---------------------------------------------------------------------------//
Realization draw_realization(McConfig const& cfg, std::uint64_t index)
{
    Realization r;
    r.seed = cfg.seed;
    r.index = index;
    r.particles.resize(static_cast<std::size_t>(n_particles(cfg)));

    auto eng = make_engine(cfg.seed, 0, index);
    for (std::size_t p = 0; p < r.particles.size(); ++p)
    {
        std::size_t m = p / 2;
        if (cfg.shared_source_phases && m > 0)
        {
            r.particles[p] = r.particles[p % 2];
            continue;
        }
        auto const& src = cfg.sources[m];
        auto& state = r.particles[p];
        state.frequencies.resize(static_cast<std::size_t>(src.n_modes));
        for (auto& f : state.frequencies)
            f = (uniform01(eng) - 0.5) * src.bandwidth_hz;
        state.phases.resize(static_cast<std::size_t>(src.n_modes)
                            * static_cast<std::size_t>(src.n_subsources));
        for (auto& phi : state.phases)
            phi = 2 * pi * uniform01(eng);
    }
    return r;
}

std::pair<Complex, Complex> TwoParticleAmplitudeSet::pair(int m, int n) const
{
    auto const& a = amplitude[static_cast<std::size_t>(2 * m)];
    auto const& b = amplitude[static_cast<std::size_t>(2 * n + 1)];
    return {a[0] * b[1], a[1] * b[0]};
}

TwoParticleAmplitudeSet amplitudes(McConfig const& cfg,
                                   Realization const& r,
                                   DetectorPair const& dets)
{
    DetectorPair pairs[] = {dets};
    auto table = build_table(cfg, pairs);
    auto amp = all_amplitudes(cfg, r, table);
    return pick(amp, table.pair_index[0]);
}

//---------------------------------------------------------------------------//
// COMPOSITION
//---------------------------------------------------------------------------//
RealizationTerms compose(McConfig const& cfg, TwoParticleAmplitudeSet const& amps)
{
    RealizationTerms t;
    int ns = amps.n_sources;
    bool orthogonal = cfg.polarization == Polarization::orthogonal;

    Complex full_b{0, 0};
    Complex full_f{0, 0};
    for (int m = 0; m < ns; ++m)
    {
        for (int n = 0; n < ns; ++n)
        {
            auto [u, v] = amps.pair(m, n);
            double classical = std::norm(u) + std::norm(v);
            t.classical += classical;
            if (orthogonal && m != n)
            {
                t.boson += classical;
                t.fermion += classical;
            }
            else
            {
                t.boson += std::norm(u + v);
                t.fermion += std::norm(u - v);
            }
            full_b += u + v;
            full_f += u - v;
        }
    }

    if (!orthogonal)
    {
        t.boson_full = std::norm(full_b);
        t.fermion_full = std::norm(full_f);
    }
    else
    {
        // Final states are labelled by the polarization reaching each
        // detector; only alternatives within one label interfere.
        auto [u11, v11] = amps.pair(0, 0);
        auto [u22, v22] = amps.pair(1, 1);
        auto [u12, v12] = amps.pair(0, 1);
        auto [u21, v21] = amps.pair(1, 0);
        t.boson_full = std::norm(u11 + v11) + std::norm(u22 + v22)
                       + std::norm(u12 + v21) + std::norm(u21 + v12);
        t.fermion_full = std::norm(u11 - v11) + std::norm(u22 - v22)
                         + std::norm(u12 - v21) + std::norm(u21 - v12);
    }

    for (std::size_t p = 0; p < amps.amplitude.size(); ++p)
    {
        std::size_t label = p % 2;
        for (std::size_t j = 0; j < 2; ++j)
            t.singles[label * 2 + j] += std::norm(amps.amplitude[p][j]);
    }
    return t;
}

//---------------------------------------------------------------------------//
// ESTIMATION
//---------------------------------------------------------------------------//
Estimate const& PointEstimate::get(ParticleStatistics s) const
{
    switch (s)
    {
        case ParticleStatistics::boson:
            return boson;
        case ParticleStatistics::fermion:
            return fermion;
        case ParticleStatistics::classical:
            return classical;
    }
    return classical;
}

std::vector<PointEstimate> g2_mc_scan(McConfig const& cfg,
                                      std::span<DetectorPair const> pairs)
{
    validate(cfg);
    for (auto const& p : pairs)
    {
        validate(p.first);
        validate(p.second);
    }
    auto table = build_table(cfg, pairs);

    std::size_t chunks = n_chunks(cfg.n_realizations);
    std::vector<std::vector<Moments>> partial(chunks);
    parallel_for_index(chunks, cfg.workers, [&](std::size_t c) {
        auto& slot = partial[c];
        slot.resize(pairs.size());
        auto begin = c * kChunk;
        auto end = std::min<std::size_t>(begin + kChunk,
                                         static_cast<std::size_t>(cfg.n_realizations));
        for (auto i = begin; i < end; ++i)
        {
            auto r = draw_realization(cfg, i);
            auto amp = all_amplitudes(cfg, r, table);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                slot[k].add(compose(cfg, pick(amp, table.pair_index[k])));
        }
    });

    std::vector<PointEstimate> out;
    out.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
    {
        Moments total;
        for (auto const& slot : partial)
            total.merge(slot[k]);
        out.push_back(finish(total));
    }
    return out;
}

Estimate g2_mc(ParticleStatistics stat,
               McConfig const& cfg,
               DetectorSpec const& det1,
               DetectorSpec const& det2)
{
    DetectorPair pairs[] = {{det1, det2}};
    return g2_mc_scan(cfg, pairs).front().get(stat);
}

CoherenceCurve mc_curve(ParticleStatistics stat,
                        McConfig const& cfg,
                        AxisKind axis,
                        std::span<double const> coordinates)
{
    std::vector<DetectorPair> pairs;
    pairs.reserve(coordinates.size());
    for (double c : coordinates)
    {
        DetectorPair p;
        if (axis == AxisKind::position_difference_m)
            p.first.x_m = c;
        else
            p.first.t_s = c;
        pairs.push_back(p);
    }
    auto est = g2_mc_scan(cfg, pairs);

    std::vector<CurvePoint> pts;
    pts.reserve(est.size());
    for (std::size_t i = 0; i < est.size(); ++i)
    {
        auto const& e = est[i].get(stat);
        pts.push_back({coordinates[i], e.value, e.stderr_, false});
    }
    CurveMetadata meta;
    meta.statistics = stat;
    meta.geometry = cfg.geometry;
    meta.source = cfg.sources.front();
    meta.generator = Generator::mc;
    meta.seed = cfg.seed;
    return CoherenceCurve(axis, std::move(pts), meta);
}

double discrete_expectation(ParticleStatistics stat,
                            McConfig const& cfg,
                            DetectorPair const& dets)
{
    validate(cfg);
    std::size_t ns = cfg.sources.size();
    double tau = dets.first.t_s - dets.second.t_s;

    // Gamma_m = E[A_{m,1} conj(A_{m,2})] for one particle of source m.
    std::vector<Complex> gamma(ns);
    for (std::size_t m = 0; m < ns; ++m)
    {
        auto const& src = cfg.sources[m];
        auto r1 = propagator_row(src, cfg.geometry, dets.first.x_m);
        auto r2 = propagator_row(src, cfg.geometry, dets.second.x_m);
        Complex acc{0, 0};
        for (std::size_t s = 0; s < r1.size(); ++s)
            acc += r1[s] * std::conj(r2[s]);
        // Mode sum: n_modes identical expectations, each carrying the
        // characteristic function of the rectangular band.
        acc *= static_cast<double>(src.n_modes)
               * analytic::sinc(pi * src.bandwidth_hz * tau);
        gamma[m] = splitter_factor(static_cast<int>(m), 0)
                   * std::conj(splitter_factor(static_cast<int>(m), 1)) * acc;
    }

    // Each particle reaches each detector with mean intensity 1/2.
    double per_label = 0.5 * static_cast<double>(ns);
    double norm = 2 * per_label * per_label;
    double interference = 0;
    if (cfg.polarization == Polarization::parallel)
    {
        Complex sum{0, 0};
        for (auto const& g : gamma)
            sum += g;
        interference = 2 * std::norm(sum);
    }
    else
    {
        for (auto const& g : gamma)
            interference += 2 * std::norm(g);
    }

    switch (stat)
    {
        case ParticleStatistics::boson:
            return 1 + interference / norm;
        case ParticleStatistics::fermion:
            return 1 - interference / norm;
        case ParticleStatistics::classical:
            return 1;
    }
    return 1;
}

//---------------------------------------------------------------------------//
// IDENTITY CHECKS
//---------------------------------------------------------------------------//
double half_sum_residual(Complex u, Complex v)
{
    return std::norm(u + v) + std::norm(u - v)
           - 2 * (std::norm(u) + std::norm(v));
}

HalfSumReport verify_half_sum(McConfig const& cfg,
                              DetectorPair const& dets,
                              std::int64_t n_realizations)
{
    McConfig run = cfg;
    run.n_realizations = n_realizations;
    validate(run);
    DetectorPair pairs[] = {dets};
    auto table = build_table(run, pairs);

    std::vector<double> residual(static_cast<std::size_t>(n_realizations));
    parallel_for_index(residual.size(), run.workers, [&](std::size_t i) {
        auto r = draw_realization(run, i);
        auto t = compose(run, pick(all_amplitudes(run, r, table), table.pair_index[0]));
        double diff = std::abs(t.classical - 0.5 * (t.boson + t.fermion));
        residual[i] = t.classical > 0 ? diff / t.classical
                                      : (diff == 0 ? 0.0 : HUGE_VAL);
    });

    HalfSumReport report;
    report.checked = n_realizations;
    for (std::size_t i = 0; i < residual.size(); ++i)
    {
        report.max_relative_residual = std::max(report.max_relative_residual,
                                                residual[i]);
        if (!(residual[i] <= 1e-12) && !report.first_violation)
        {
            report.ok = false;
            report.first_violation = static_cast<std::int64_t>(i);
        }
    }
    return report;
}

CrossTermReport verify_cross_term_cancellation(McConfig const& cfg,
                                               DetectorPair const& dets)
{
    validate(cfg);
    DetectorPair pairs[] = {dets};
    auto table = build_table(cfg, pairs);
    int ns = static_cast<int>(cfg.sources.size());
    int n_terms = ns * ns;
    int n_cross = n_terms * (n_terms - 1) / 2;

    // Per realization: B full, B reduced, F full, F reduced, then the
    // boson and fermion cross terms 2 Re(T_p conj(T_q)) for p < q.
    std::size_t width = 4 + 2 * static_cast<std::size_t>(n_cross);
    std::size_t n = static_cast<std::size_t>(cfg.n_realizations);
    std::vector<double> rows(n * width);
    parallel_for_index(n, cfg.workers, [&](std::size_t i) {
        auto r = draw_realization(cfg, i);
        auto amps = pick(all_amplitudes(cfg, r, table), table.pair_index[0]);
        auto t = compose(cfg, amps);
        double* row = rows.data() + i * width;
        row[0] = t.boson_full;
        row[1] = t.boson;
        row[2] = t.fermion_full;
        row[3] = t.fermion;

        std::vector<std::pair<Complex, Complex>> terms;
        for (int m = 0; m < ns; ++m)
        {
            for (int k = 0; k < ns; ++k)
            {
                auto [u, v] = amps.pair(m, k);
                terms.emplace_back(u + v, u - v);
            }
        }
        std::size_t c = 4;
        for (int p = 0; p < n_terms; ++p)
        {
            for (int q = p + 1; q < n_terms; ++q)
            {
                row[c++] = 2 * std::real(terms[p].first * std::conj(terms[q].first));
                row[c++] = 2 * std::real(terms[p].second * std::conj(terms[q].second));
            }
        }
    });

    auto column_stats = [&](auto value_of) {
        double mean = 0;
        for (std::size_t i = 0; i < n; ++i)
            mean += value_of(rows.data() + i * width);
        mean /= static_cast<double>(n);
        double ss = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double d = value_of(rows.data() + i * width) - mean;
            ss += d * d;
        }
        double se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
        return std::pair{mean, se};
    };
    auto zscore = [](double mean, double se) {
        if (se > 0)
            return mean / se;
        return mean == 0 ? 0.0 : HUGE_VAL;
    };

    CrossTermReport report;
    report.n_realizations = cfg.n_realizations;
    report.termwise_identical = true;
    for (std::size_t i = 0; i < n; ++i)
    {
        double const* row = rows.data() + i * width;
        if (row[0] != row[1] || row[2] != row[3])
        {
            report.termwise_identical = false;
            break;
        }
    }

    auto compare = [&](std::size_t full, std::size_t reduced) {
        CrossTermReport::Comparison c;
        c.full_mean = column_stats([&](double const* r) { return r[full]; }).first;
        c.reduced_mean = column_stats([&](double const* r) { return r[reduced]; }).first;
        auto [dm, dse] = column_stats(
            [&](double const* r) { return r[full] - r[reduced]; });
        c.diff_mean = dm;
        c.diff_stderr = dse;
        c.z = zscore(dm, dse);
        return c;
    };
    report.boson = compare(0, 1);
    report.fermion = compare(2, 3);

    for (std::size_t c = 4; c < width; ++c)
    {
        auto [m, se] = column_stats([&](double const* r) { return r[c]; });
        report.max_cross_term_z = std::max(report.max_cross_term_z,
                                           std::abs(zscore(m, se)));
    }

    double zb = std::abs(report.boson.z);
    double zf = std::abs(report.fermion.z);
    report.agrees = zb <= 3 && zf <= 3;
    report.violation = zb > 5 || zf > 5;
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::mc
