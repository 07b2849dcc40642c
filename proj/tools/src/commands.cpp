// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file commands.cpp
//---------------------------------------------------------------------------//
#include "antibunch/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "antibunch/analytic.hpp"
#include "antibunch/cli/io.hpp"
#include "antibunch/events.hpp"
#include "antibunch/fit.hpp"
#include "command_impl.hpp"

#ifndef ANTIBUNCH_VERSION
#    define ANTIBUNCH_VERSION "0.0.0"
#endif

namespace antibunch::cli
{
namespace
{
//---------------------------------------------------------------------------//
std::map<std::string, std::vector<ConfigKey>> const& key_tables()
{
    static std::vector<ConfigKey> const curve_keys = {
        {"geometry", "hbt", "interferometer: hbt or hom"},
        {"axis", "position", "scan axis: position or time"},
        {"statistics", "fermion", "boson, fermion, classical or all"},
        {"l", "0.55mm", "source size"},
        {"lambda", "780nm", "central wavelength"},
        {"z", "910mm", "source to detector distance"},
        {"dnu", "", "bandwidth (alternative to tau_c)"},
        {"tau_c", "296ns", "coherence time 1/dnu"},
        {"d", "2mm", "HOM source separation"},
        {"polarization", "parallel", "HOM polarization: parallel or orthogonal"},
        {"min", "", "scan start (default -3mm or -1us)"},
        {"max", "", "scan end (default 3mm or 1us)"},
        {"name", "", "output file stem"},
    };
    static std::map<std::string, std::vector<ConfigKey>> const tables = [] {
        std::map<std::string, std::vector<ConfigKey>> t;
        auto analytic = curve_keys;
        analytic.push_back({"beta", "1", "degeneracy/contrast factor"});
        analytic.push_back({"points", "121", "scan points"});
        analytic.push_back({"at", "", "single-point query: print g2 here"});
        t["analytic"] = analytic;

        auto mc = curve_keys;
        mc.push_back({"points", "21", "scan points"});
        mc.push_back({"n_realizations", "20000", "MC realizations"});
        mc.push_back({"n_subsources", "200", "sub-sources across the slit"});
        mc.push_back({"n_modes", "", "frequency modes (default 1, or 64 on time axis)"});
        mc.push_back({"seed", "20160503", "random seed"});
        t["mc"] = mc;

        t["events"] = {
            {"dnu", "", "bandwidth (alternative to tau_c)"},
            {"tau_c", "296ns", "coherence time 1/dnu"},
            {"duration", "50s", "acquisition time"},
            {"dt", "0", "trace sample spacing (0: 1/(20 dnu))"},
            {"n_modes", "512", "pseudothermal modes"},
            {"rate", "50kHz", "mean singles rate per detector"},
            {"jitter", "0.45ns", "detector timing jitter (sigma)"},
            {"bin", "61ns", "histogram bin width"},
            {"max_lag", "3us", "histogram half range"},
            {"synth_fermion", "1", "also write the synthesized fermion curve"},
            {"save_events", "0", "write the raw event streams"},
            {"seed", "20160503", "random seed"},
            {"name", "", "output file stem"},
        };
        t["fit"] = {
            {"input", "", "curve CSV to fit"},
            {"model", "", "hbt_temporal, hbt_spatial, hom_parallel or hom_orthogonal"},
            {"statistics", "fermion", "boson or fermion"},
            {"lambda", "780nm", "wavelength (spatial models)"},
            {"z", "910mm", "distance (spatial models)"},
            {"max_iterations", "500", "iteration limit"},
            {"name", "", "output file stem"},
        };
        t["reproduce"] = {
            {"figure", "", "fig3, fig4, fig5 or fig6"},
            {"seed", "20160503", "random seed"},
            {"n_realizations", "20000", "MC realizations (fig4, fig5)"},
            {"duration", "50s", "acquisition time (fig3)"},
            {"name", "", "output file stem (default: figure)"},
        };
        return t;
    }();
    return tables;
}

bool is_dynamic_fit_key(std::string const& key)
{
    return key.rfind("fix_", 0) == 0 || key.rfind("init_", 0) == 0;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<ConfigKey> const& command_keys(std::string const& command)
{
    auto const& t = key_tables();
    auto it = t.find(command);
    if (it == t.end())
    {
        throw ConfigError("unknown command '" + command + "'");
    }
    return it->second;
}

std::vector<std::string> const& command_names()
{
    static std::vector<std::string> const names
        = {"analytic", "mc", "events", "fit", "reproduce"};
    return names;
}

std::filesystem::path default_out_dir()
{
    if (char const* env = std::getenv("ANTIBUNCH_OUT_DIR"); env && *env)
    {
        return env;
    }
    return ".";
}

KeyValues resolve_config(std::string const& command, KeyValues const& given)
{
    auto const& keys = command_keys(command);
    for (auto const& [k, v] : given)
    {
        bool known = std::any_of(keys.begin(), keys.end(), [&](ConfigKey const& c) {
            return c.key == k;
        });
        if (!known && !(command == "fit" && is_dynamic_fit_key(k)))
        {
            throw ConfigError("unknown key '" + k + "' for command '" + command + "'");
        }
    }

    KeyValues kv = given;
    auto has = [&](char const* k) { return kv.count(k) > 0; };
    auto value = [&](char const* k, char const* fallback) {
        auto it = kv.find(k);
        return it == kv.end() ? std::string(fallback) : it->second;
    };

    // Defaults whose applicability depends on other keys.
    std::string const geometry = value("geometry", "hbt");
    std::string const axis = value("axis", "position");
    std::string model;
    if (command == "fit")
    {
        model = value("model", "");
    }
    for (auto const& c : keys)
    {
        if (c.default_value.empty() || has(c.key.c_str()))
        {
            continue;
        }
        if ((c.key == "d" || c.key == "polarization") && geometry != "hom")
        {
            continue;
        }
        if (c.key == "tau_c" && has("dnu"))
        {
            continue;
        }
        if (command == "fit" && (c.key == "lambda" || c.key == "z")
            && model == "hbt_temporal")
        {
            continue;
        }
        kv[c.key] = c.default_value;
    }
    if (command == "analytic" || command == "mc")
    {
        bool time = axis == "time";
        if (!has("min"))
        {
            kv["min"] = time ? "-1us" : "-3mm";
        }
        if (!has("max"))
        {
            kv["max"] = time ? "1us" : "3mm";
        }
        if (command == "mc" && !has("n_modes"))
        {
            kv["n_modes"] = time ? "64" : "1";
        }
    }
    if (!has("name"))
    {
        kv["name"] = command == "reproduce" ? value("figure", "reproduce") : command;
    }
    return kv;
}

//---------------------------------------------------------------------------//
void run_command(std::string const& command, KeyValues const& config, RunContext const& ctx)
{
    using namespace detail;
    KeyValues kv = resolve_config(command, config);
    auto const start = std::chrono::steady_clock::now();

    CommandResult res;
    if (command == "analytic")
        res = run_analytic(kv, ctx);
    else if (command == "mc")
        res = run_mc(kv, ctx);
    else if (command == "events")
        res = run_events(kv, ctx);
    else if (command == "fit")
        res = run_fit(kv, ctx);
    else if (command == "reproduce")
        res = run_reproduce(kv, ctx);
    else
        throw ConfigError("unknown command '" + command + "'");

    double const elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (res.files.empty())
    {
        return;
    }

    std::string const& name = kv.at("name");
    Json meta;
    meta["antibunch_version"] = ANTIBUNCH_VERSION;
    meta["command"] = command;
    meta["config"] = kv;
    Json outputs = Json::array();
    for (auto const& [file, text] : res.files)
    {
        write_file(ctx.out_dir / file, text);
        outputs.push_back(file);
    }
    meta["outputs"] = outputs;
    meta["results"] = res.results;
    write_file(ctx.out_dir / (name + ".json"), meta.dump(2) + "\n");

    Json timing;
    timing["command"] = command;
    timing["wall_time_s"] = elapsed;
    timing["workers"] = ctx.workers;
    write_file(ctx.out_dir / (name + ".timing.json"), timing.dump(2) + "\n");

    if (ctx.out)
    {
        *ctx.out << "wrote " << (ctx.out_dir / (name + ".json")).string() << '\n';
    }
    if (res.not_converged)
    {
        throw NotConvergedError("fit did not converge");
    }
}

std::pair<std::string, KeyValues> load_metadata(std::filesystem::path const& path)
{
    try
    {
        auto j = detail::Json::parse(read_file(path));
        auto command = j.at("command").get<std::string>();
        KeyValues kv;
        for (auto const& [k, v] : j.at("config").items())
        {
            kv[k] = v.get<std::string>();
        }
        return {command, kv};
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ConfigError("malformed metadata '" + path.string() + "': " + e.what());
    }
}

//---------------------------------------------------------------------------//
// HELPERS
//---------------------------------------------------------------------------//
namespace detail
{
std::string const& require(KeyValues const& kv, std::string const& key)
{
    auto it = kv.find(key);
    if (it == kv.end() || it->second.empty())
    {
        throw ConfigError("missing required key '" + key + "'");
    }
    return it->second;
}

double quantity(KeyValues const& kv, std::string const& key, Dimension dim)
{
    try
    {
        return parse_quantity(require(kv, key), dim);
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(key + ": " + e.what());
    }
}

long long integer(KeyValues const& kv, std::string const& key)
{
    auto const& s = require(kv, key);
    try
    {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size())
        {
            return v;
        }
    }
    catch (std::exception const&)
    {
    }
    throw ConfigError(key + ": expected an integer, got '" + s + "'");
}

bool flag(KeyValues const& kv, std::string const& key)
{
    auto const& s = require(kv, key);
    if (s == "1" || s == "true" || s == "yes")
        return true;
    if (s == "0" || s == "false" || s == "no")
        return false;
    throw ConfigError(key + ": expected 0 or 1, got '" + s + "'");
}

std::uint64_t seed_of(KeyValues const& kv)
{
    auto v = integer(kv, "seed");
    if (v < 0)
    {
        throw ConfigError("seed must be nonnegative");
    }
    return static_cast<std::uint64_t>(v);
}

AxisKind axis_of(KeyValues const& kv)
{
    auto const& a = require(kv, "axis");
    if (a == "position")
        return AxisKind::position_difference_m;
    if (a == "time")
        return AxisKind::time_difference_s;
    throw ConfigError("axis must be position or time, got '" + a + "'");
}

std::vector<double> scan_coordinates(KeyValues const& kv, AxisKind axis)
{
    Dimension dim = axis == AxisKind::time_difference_s ? Dimension::time
                                                        : Dimension::length;
    double lo = quantity(kv, "min", dim);
    double hi = quantity(kv, "max", dim);
    auto n = integer(kv, "points");
    if (n < 2)
    {
        throw ConfigError("points must be at least 2");
    }
    if (!(hi > lo))
    {
        throw ConfigError("max must exceed min");
    }
    return analytic::linspace(lo, hi, static_cast<std::size_t>(n));
}

std::vector<ParticleStatistics> statistics_list(std::string const& s)
{
    if (s == "all")
    {
        return {ParticleStatistics::boson,
                ParticleStatistics::fermion,
                ParticleStatistics::classical};
    }
    return {parse_statistics(s)};
}

mc::McConfig mc_config(KeyValues const& kv, unsigned workers)
{
    auto source = get_source(kv);
    auto geometry = get_geometry(kv);
    validate_config(source, geometry);
    mc::McConfig cfg;
    if (geometry.kind == InterferometerKind::hom)
    {
        cfg = mc::make_hom_config(
            source, geometry, parse_polarization(require(kv, "polarization")));
    }
    else
    {
        cfg.geometry = geometry;
        cfg.sources = {source};
    }
    cfg.n_realizations = integer(kv, "n_realizations");
    cfg.seed = seed_of(kv);
    cfg.workers = workers;
    mc::validate(cfg);
    return cfg;
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

//---------------------------------------------------------------------------//
// ANALYTIC
//---------------------------------------------------------------------------//
namespace
{
analytic::AnalyticModel analytic_model(KeyValues const& kv, ParticleStatistics stat)
{
    analytic::AnalyticModel m;
    m.statistics = stat;
    m.source = get_source(kv);
    m.geometry = get_geometry(kv);
    validate_config(m.source, m.geometry);
    m.axis = axis_of(kv);
    if (m.geometry.kind == InterferometerKind::hom)
    {
        m.polarization = parse_polarization(require(kv, "polarization"));
    }
    m.beta = quantity(kv, "beta", Dimension::dimensionless);
    analytic::validate(m);
    return m;
}

std::string curve_file(std::string const& name,
                       ParticleStatistics stat,
                       std::size_t n_stats)
{
    if (n_stats == 1)
    {
        return name + ".csv";
    }
    return name + "_" + std::string(to_string(stat)) + ".csv";
}
}  // namespace

CommandResult run_analytic(KeyValues const& kv, RunContext const& ctx)
{
    CommandResult res;
    auto stats = statistics_list(require(kv, "statistics"));
    AxisKind axis = axis_of(kv);

    if (auto it = kv.find("at"); it != kv.end() && !it->second.empty())
    {
        Dimension dim = axis == AxisKind::time_difference_s ? Dimension::time
                                                            : Dimension::length;
        double x = quantity(kv, "at", dim);
        for (auto stat : stats)
        {
            double g = analytic::evaluate(analytic_model(kv, stat), x);
            if (ctx.out)
            {
                if (stats.size() > 1)
                {
                    *ctx.out << to_string(stat) << ' ';
                }
                *ctx.out << format_double(g) << '\n';
            }
        }
        return res;
    }

    auto coords = scan_coordinates(kv, axis);
    auto const& name = require(kv, "name");
    for (auto stat : stats)
    {
        auto curve = analytic::make_curve(analytic_model(kv, stat), coords);
        res.add(curve_file(name, stat, stats.size()), curve_csv(curve));
        res.results[std::string(to_string(stat))]["visibility"]
            = analytic::visibility(curve);
    }
    res.results["generator"] = "analytic";
    return res;
}

//---------------------------------------------------------------------------//
// MC
//---------------------------------------------------------------------------//
CommandResult run_mc(KeyValues const& kv, RunContext const& ctx)
{
    CommandResult res;
    auto stats = statistics_list(require(kv, "statistics"));
    AxisKind axis = axis_of(kv);
    auto coords = scan_coordinates(kv, axis);
    auto cfg = mc_config(kv, ctx.workers);
    auto const& name = require(kv, "name");
    for (auto stat : stats)
    {
        auto curve = mc::mc_curve(stat, cfg, axis, coords);
        res.add(curve_file(name, stat, stats.size()), curve_csv(curve));
    }
    res.results["generator"] = "mc";
    res.results["seed"] = cfg.seed;
    res.results["n_realizations"] = cfg.n_realizations;
    return res;
}

//---------------------------------------------------------------------------//
// EVENTS
//---------------------------------------------------------------------------//
CommandResult run_events(KeyValues const& kv, RunContext const& ctx)
{
    CommandResult res;
    events::HbtEventConfig cfg;
    if (kv.count("dnu"))
    {
        cfg.dnu_hz = quantity(kv, "dnu", Dimension::frequency);
    }
    else
    {
        double tau = quantity(kv, "tau_c", Dimension::time);
        if (!(tau > 0))
        {
            throw ConfigError("tau_c must be positive");
        }
        cfg.dnu_hz = 1 / tau;
    }
    cfg.duration_s = quantity(kv, "duration", Dimension::time);
    cfg.dt_s = quantity(kv, "dt", Dimension::time);
    cfg.n_modes = static_cast<int>(integer(kv, "n_modes"));
    cfg.mean_rate_hz = quantity(kv, "rate", Dimension::frequency);
    cfg.jitter_sigma_s = quantity(kv, "jitter", Dimension::time);
    cfg.seed = seed_of(kv);
    cfg.workers = ctx.workers;
    double bin = quantity(kv, "bin", Dimension::time);
    double max_lag = quantity(kv, "max_lag", Dimension::time);
    auto const& name = require(kv, "name");

    auto run = events::simulate_hbt_events(cfg);
    auto hist = events::coincidence_histogram(run.first, run.second, bin, max_lag);
    res.add(name + "_histogram.csv", histogram_csv(hist));
    if (flag(kv, "save_events"))
    {
        std::ostringstream os;
        std::vector<events::EventStream> streams{run.first, run.second};
        events::write_events(os, streams);
        res.add(name + "_events.txt", os.str());
    }
    res.results["generator"] = "event";
    res.results["seed"] = cfg.seed;
    res.results["events"] = {run.first.timestamps.size(), run.second.timestamps.size()};
    res.results["total_pairs"] = hist.total_pairs;

    if (run.first.timestamps.empty() || run.second.timestamps.empty())
    {
        if (ctx.err)
        {
            *ctx.err << "warning: empty event stream; histogram not normalized\n";
        }
        res.results["normalized"] = false;
        return res;
    }
    auto boson = events::normalize_histogram(hist);
    res.add(name + ".csv", curve_csv(boson));
    res.results["normalized"] = true;
    res.results["singles_rates_hz"] = {hist.singles_rates[0], hist.singles_rates[1]};
    if (flag(kv, "synth_fermion"))
    {
        auto fermion = events::synth_fermion_histogram(boson);
        std::size_t flagged = 0;
        for (auto const& p : fermion.points())
        {
            flagged += p.flagged ? 1 : 0;
        }
        res.add(name + "_fermion.csv", curve_csv(fermion));
        res.results["fermion_flagged_bins"] = flagged;
    }
    return res;
}

//---------------------------------------------------------------------------//
// FIT
//---------------------------------------------------------------------------//
namespace
{
Dimension param_dimension(std::string const& p)
{
    if (p == "l_m" || p == "d_m" || p == "lambda_m" || p == "z_m")
        return Dimension::length;
    if (p == "dnu_hz")
        return Dimension::frequency;
    return Dimension::dimensionless;
}
}  // namespace

CommandResult run_fit(KeyValues const& kv, RunContext const& ctx)
{
    CommandResult res;
    auto model = parse_fit_model(require(kv, "model"));
    auto stat = parse_statistics(require(kv, "statistics"));
    fit::statistics_sign(stat);
    AxisKind axis = model == FitModelId::hbt_temporal
                        ? AxisKind::time_difference_s
                        : AxisKind::position_difference_m;
    CurveMetadata meta;
    meta.statistics = stat;
    auto curve = parse_curve_csv(read_file(require(kv, "input")), axis, meta);

    fit::ParamMap fixed;
    if (model != FitModelId::hbt_temporal)
    {
        fixed["lambda_m"] = quantity(kv, "lambda", Dimension::length);
        fixed["z_m"] = quantity(kv, "z", Dimension::length);
    }
    auto names = fit::model_parameters(model);
    auto check_name = [&](std::string const& p) {
        if (std::find(names.begin(), names.end(), p) == names.end())
        {
            std::string valid;
            for (auto const& n : names)
                valid += (valid.empty() ? "" : ", ") + n;
            throw ConfigError("unknown parameter '" + p + "' (valid: " + valid + ")");
        }
    };
    for (auto const& [k, v] : kv)
    {
        if (k.rfind("fix_", 0) == 0)
        {
            auto p = k.substr(4);
            check_name(p);
            fixed[p] = quantity(kv, k, param_dimension(p));
        }
    }
    auto spec = fit::initialize(model, stat, curve, fixed);
    for (auto& fp : spec.free_params)
    {
        auto it = kv.find("init_" + fp.name);
        if (it == kv.end())
            continue;
        double v = quantity(kv, it->first, param_dimension(fp.name));
        fp.initial = v;
        fp.lower = std::min(fp.lower, fp.name == "beta" ? 0.0 : v / 10);
        fp.upper = std::max(fp.upper, fp.name == "beta" ? 1.0 : v * 10);
    }
    for (auto const& [k, v] : kv)
    {
        if (k.rfind("init_", 0) == 0)
            check_name(k.substr(5));
    }

    fit::FitOptions options;
    options.max_iterations = static_cast<int>(integer(kv, "max_iterations"));
    if (options.max_iterations < 1)
    {
        throw ConfigError("max_iterations must be positive");
    }
    auto result = fit::fit(curve, spec, options);
    auto const& name = require(kv, "name");
    res.add(name + "_fit.json", fit::to_json(result) + "\n");

    std::vector<CurvePoint> pts;
    for (auto const& p : curve.points())
    {
        pts.push_back({p.coordinate, fit::evaluate(result, fixed, p.coordinate), 0, false});
    }
    CurveMetadata model_meta = meta;
    res.add(name + "_model.csv", curve_csv(CoherenceCurve(axis, pts, model_meta)));

    res.results["converged"] = result.converged;
    res.results["params"] = result.params;
    res.results["param_stderr"] = result.param_stderr;
    if (result.converged)
    {
        res.results["visibility"] = fit::extract_visibility(result, fixed, curve);
    }
    if (ctx.out)
    {
        auto& os = *ctx.out;
        os << "model " << to_string(model) << " (" << to_string(stat) << "): "
           << (result.converged ? "converged" : "NOT converged") << " after "
           << result.iterations << " iterations, " << result.message << '\n';
        for (auto const& [p, v] : result.params)
        {
            os << "  " << p << " = " << format_double(v);
            if (auto it = result.param_stderr.find(p); it != result.param_stderr.end())
            {
                os << " +/- " << format_double(it->second);
            }
            os << '\n';
        }
        os << "  residual_norm = " << format_double(result.residual_norm) << '\n';
        if (result.converged)
        {
            os << "  visibility = "
               << format_double(res.results["visibility"].get<double>()) << '\n';
        }
    }
    res.not_converged = !result.converged;
    return res;
}
}  // namespace detail

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli
