// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fit.cpp
//---------------------------------------------------------------------------//
#include "antibunch/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <json.hpp>

#include "antibunch/analytic.hpp"

namespace antibunch::fit
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double kPi = std::numbers::pi;
//! sinc^2(a) = 1/2 at this argument.
constexpr double kHalfWidthArg = 1.391557377251510;

bool is_spatial(FitModelId id)
{
    return id != FitModelId::hbt_temporal;
}

double get(ParamMap const& p, std::string const& name)
{
    auto it = p.find(name);
    if (it == p.end())
    {
        throw ConfigError("missing fit parameter '" + name + "'");
    }
    return it->second;
}

//! Envelope argument a, its derivative wrt the width parameter, and the
//! prefactor multiplying beta.
struct Terms
{
    double a{0};
    double da_dwidth{0};
    double weight{1};  //!< factor multiplying beta S(a)
    double dweight_dd{0};
};

Terms terms(FitModelId id, ParamMap const& p, double x)
{
    Terms t;
    if (id == FitModelId::hbt_temporal)
    {
        double dnu = get(p, "dnu_hz");
        t.a = kPi * dnu * x;
        t.da_dwidth = kPi * x;
        return t;
    }
    double lz = get(p, "lambda_m") * get(p, "z_m");
    double l = get(p, "l_m");
    t.a = kPi * l * x / lz;
    t.da_dwidth = kPi * x / lz;
    if (id == FitModelId::hom_orthogonal)
    {
        t.weight = 0.5;
    }
    else if (id == FitModelId::hom_parallel)
    {
        double k = 2 * kPi * x / lz;
        double d = get(p, "d_m");
        t.weight = 0.5 * (1 - std::cos(k * d));
        t.dweight_dd = 0.5 * k * std::sin(k * d);
    }
    return t;
}

std::string width_name(FitModelId id)
{
    return id == FitModelId::hbt_temporal ? "dnu_hz" : "l_m";
}

ParamMap merged(ParamMap fixed, ParamMap const& free)
{
    for (auto const& [k, v] : free)
    {
        fixed[k] = v;
    }
    return fixed;
}

double median(std::vector<double> v)
{
    if (v.empty())
    {
        throw ConfigError("cannot initialize fit from an empty curve");
    }
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    double hi = *mid;
    if (v.size() % 2 == 1)
    {
        return hi;
    }
    double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

struct Sample
{
    double x;
    double y;
    double sigma;
};

std::vector<Sample> usable_points(CoherenceCurve const& curve)
{
    std::vector<Sample> out;
    for (auto const& pt : curve.points())
    {
        if (!pt.flagged)
        {
            out.push_back({pt.coordinate, pt.g2, pt.stderr_});
        }
    }
    return out;
}

//! Smallest |x| beyond the feature center where dev falls to half its peak.
double half_width(std::vector<Sample> const& pts,
                  std::vector<double> const& dev,
                  double peak)
{
    // Walk outward on each side from the point nearest zero.
    std::size_t center = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
    {
        if (std::abs(pts[i].x) < std::abs(pts[center].x))
        {
            center = i;
        }
    }
    std::vector<double> found;
    auto walk = [&](int step) {
        for (auto i = static_cast<std::ptrdiff_t>(center);;)
        {
            auto j = i + step;
            if (j < 0 || j >= static_cast<std::ptrdiff_t>(pts.size()))
            {
                return;
            }
            if (dev[j] <= 0.5 * peak)
            {
                double f = (dev[i] - 0.5 * peak) / (dev[i] - dev[j]);
                double x = pts[i].x + f * (pts[j].x - pts[i].x);
                found.push_back(std::abs(x));
                return;
            }
            i = j;
        }
    };
    walk(1);
    walk(-1);
    if (found.empty())
    {
        double span = std::max(std::abs(pts.front().x), std::abs(pts.back().x));
        return span;
    }
    double sum = 0;
    for (double f : found)
    {
        sum += f;
    }
    return sum / static_cast<double>(found.size());
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> model_parameters(FitModelId id)
{
    switch (id)
    {
        case FitModelId::hbt_temporal:
            return {"dnu_hz", "beta", "background"};
        case FitModelId::hbt_spatial:
        case FitModelId::hom_orthogonal:
            return {"l_m", "beta", "background"};
        case FitModelId::hom_parallel:
            return {"l_m", "d_m", "beta", "background"};
    }
    return {};
}

std::vector<std::string> geometry_parameters(FitModelId id)
{
    if (is_spatial(id))
    {
        return {"lambda_m", "z_m"};
    }
    return {};
}

double statistics_sign(ParticleStatistics stat)
{
    switch (stat)
    {
        case ParticleStatistics::boson:
            return 1.0;
        case ParticleStatistics::fermion:
            return -1.0;
        case ParticleStatistics::classical:
            break;
    }
    throw ConfigError("fit statistics must be boson or fermion");
}

void validate(FitModelSpec const& spec)
{
    statistics_sign(spec.statistics);
    for (auto const& name : geometry_parameters(spec.model_id))
    {
        auto it = spec.fixed_params.find(name);
        if (it == spec.fixed_params.end())
        {
            throw ConfigError(name + " must be fixed for "
                              + std::string(to_string(spec.model_id)));
        }
        if (!(it->second > 0))
        {
            throw ConfigError(name + " must be positive");
        }
    }
    auto names = model_parameters(spec.model_id);
    for (auto const& fp : spec.free_params)
    {
        if (std::find(names.begin(), names.end(), fp.name) == names.end())
        {
            throw ConfigError("unknown free parameter '" + fp.name + "' for "
                              + std::string(to_string(spec.model_id)));
        }
        if (spec.fixed_params.count(fp.name))
        {
            throw ConfigError("parameter '" + fp.name
                              + "' is both fixed and free");
        }
        if (!(fp.lower <= fp.initial && fp.initial <= fp.upper))
        {
            throw ConfigError("initial value of '" + fp.name
                              + "' outside its bounds");
        }
    }
    for (auto const& name : names)
    {
        bool is_free = std::any_of(
            spec.free_params.begin(),
            spec.free_params.end(),
            [&](FreeParam const& fp) { return fp.name == name; });
        if (!is_free && !spec.fixed_params.count(name))
        {
            throw ConfigError("parameter '" + name
                              + "' is neither fixed nor free");
        }
    }
    if (spec.free_params.empty())
    {
        throw ConfigError("fit has no free parameters");
    }
}

//---------------------------------------------------------------------------//
double model_value(FitModelId id, ParticleStatistics stat, ParamMap const& p, double x)
{
    double s = statistics_sign(stat);
    Terms t = terms(id, p, x);
    double sc = analytic::sinc(t.a);
    return get(p, "background") + s * get(p, "beta") * t.weight * sc * sc;
}

std::vector<double> model_gradient(FitModelId id,
                                   ParticleStatistics stat,
                                   ParamMap const& p,
                                   double x,
                                   std::span<std::string const> names)
{
    double s = statistics_sign(stat);
    double beta = get(p, "beta");
    Terms t = terms(id, p, x);
    double sc = analytic::sinc(t.a);
    double S = sc * sc;
    double dS = 2 * sc * analytic::sinc_derivative(t.a);
    auto const width = width_name(id);

    std::vector<double> out;
    out.reserve(names.size());
    for (auto const& n : names)
    {
        if (n == "background")
        {
            out.push_back(1.0);
        }
        else if (n == "beta")
        {
            out.push_back(s * t.weight * S);
        }
        else if (n == width)
        {
            out.push_back(s * beta * t.weight * dS * t.da_dwidth);
        }
        else if (n == "d_m" && id == FitModelId::hom_parallel)
        {
            out.push_back(s * beta * S * t.dweight_dd);
        }
        else
        {
            throw ConfigError("no derivative for parameter '" + n + "'");
        }
    }
    return out;
}

//---------------------------------------------------------------------------//
FitModelSpec initialize(FitModelId id,
                        ParticleStatistics stat,
                        CoherenceCurve const& curve,
                        ParamMap const& fixed)
{
    FitModelSpec spec;
    spec.model_id = id;
    spec.statistics = stat;
    spec.fixed_params = fixed;
    double s = statistics_sign(stat);

    auto pts = usable_points(curve);
    if (pts.size() < 3)
    {
        throw ConfigError("too few usable points to initialize fit");
    }
    double xmax = 0;
    for (auto const& pt : pts)
    {
        xmax = std::max(xmax, std::abs(pt.x));
    }

    // Background: median of the outer 20% of the range.
    std::vector<double> outer;
    for (auto const& pt : pts)
    {
        if (std::abs(pt.x) >= 0.8 * xmax)
        {
            outer.push_back(pt.y);
        }
    }
    if (outer.size() < 3)
    {
        std::vector<Sample> sorted = pts;
        std::sort(sorted.begin(), sorted.end(), [](auto const& a, auto const& b) {
            return std::abs(a.x) > std::abs(b.x);
        });
        outer.clear();
        auto n = std::max<std::size_t>(3, sorted.size() / 5);
        for (std::size_t i = 0; i < n && i < sorted.size(); ++i)
        {
            outer.push_back(sorted[i].y);
        }
    }
    double bg = fixed.count("background") ? fixed.at("background") : median(outer);

    std::vector<double> dev(pts.size());
    double peak = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        dev[i] = s * (pts[i].y - bg);
        peak = std::max(peak, dev[i]);
    }

    double lz = 1;
    if (is_spatial(id))
    {
        lz = get(fixed, "lambda_m") * get(fixed, "z_m");
    }

    ParamMap guess;
    double depth_scale = (id == FitModelId::hbt_temporal
                          || id == FitModelId::hbt_spatial)
                             ? 1.0
                             : 0.5;
    if (id == FitModelId::hom_parallel)
    {
        // The peak of S (1 - cos) / 2 approaches S near the center.
        depth_scale = 1.0;
    }
    guess["beta"] = std::clamp(peak / depth_scale, 0.05, 1.0);
    guess["background"] = bg;

    double d_guess = 0;
    if (id == FitModelId::hom_parallel && !fixed.count("d_m"))
    {
        // Dominant spatial frequency of the oscillation: minimum of the even
        // cosine transform of dev (dev ~ S (1 - cos) projects negatively).
        double dx_min = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < pts.size(); ++i)
        {
            dx_min = std::min(dx_min, pts[i].x - pts[i - 1].x);
        }
        double f_lo = 0.5 / xmax;
        double f_hi = 0.5 / dx_min;
        int n_f = 4000;
        double best_f = f_lo;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n_f; ++k)
        {
            double f = f_lo + (f_hi - f_lo) * k / (n_f - 1);
            double c = 0;
            for (std::size_t i = 0; i < pts.size(); ++i)
            {
                c += dev[i] * std::cos(2 * kPi * f * pts[i].x);
            }
            if (c < best)
            {
                best = c;
                best_f = f;
            }
        }
        d_guess = best_f * lz;
        guess["d_m"] = d_guess;
    }

    std::string const width = width_name(id);
    if (!fixed.count(width))
    {
        std::vector<double> env = dev;
        if (id == FitModelId::hom_parallel && d_guess > 0)
        {
            // Running max over one oscillation period recovers the envelope.
            double period = lz / d_guess;
            for (std::size_t i = 0; i < pts.size(); ++i)
            {
                double m = dev[i];
                for (std::size_t j = 0; j < pts.size(); ++j)
                {
                    if (std::abs(pts[j].x - pts[i].x) <= 0.5 * period)
                    {
                        m = std::max(m, dev[j]);
                    }
                }
                env[i] = m;
            }
        }
        double env_peak = *std::max_element(env.begin(), env.end());
        double hw = half_width(pts, env, env_peak);
        hw = std::max(hw, 1e-300);
        guess[width] = id == FitModelId::hbt_temporal
                           ? kHalfWidthArg / (kPi * hw)
                           : kHalfWidthArg * lz / (kPi * hw);
    }

    for (auto const& name : model_parameters(id))
    {
        if (fixed.count(name))
        {
            continue;
        }
        double v = guess.at(name);
        FreeParam fp{name, v, 0, 0};
        if (name == "beta")
        {
            fp.lower = 0;
            fp.upper = 1;
        }
        else if (name == "background")
        {
            fp.lower = v - 1;
            fp.upper = v + 1;
        }
        else if (name == "d_m")
        {
            fp.lower = 0;
            fp.upper = std::max(10 * v, 10 * lz / xmax);
        }
        else
        {
            fp.lower = v / 10;
            fp.upper = v * 10;
        }
        spec.free_params.push_back(fp);
    }
    return spec;
}

//---------------------------------------------------------------------------//
FitResult fit(CoherenceCurve const& curve,
              FitModelSpec const& spec,
              FitOptions const& options)
{
    validate(spec);
    auto pts = usable_points(curve);
    auto const n_par = static_cast<Eigen::Index>(spec.free_params.size());
    auto const n_pts = static_cast<Eigen::Index>(pts.size());
    if (n_pts <= n_par)
    {
        throw ConfigError("fit needs more usable points than free parameters");
    }

    bool weighted = std::all_of(pts.begin(), pts.end(), [](Sample const& s) {
        return s.sigma > 0;
    });

    std::vector<std::string> names;
    Eigen::VectorXd p(n_par), lo(n_par), hi(n_par);
    for (Eigen::Index j = 0; j < n_par; ++j)
    {
        auto const& fp = spec.free_params[static_cast<std::size_t>(j)];
        names.push_back(fp.name);
        p[j] = fp.initial;
        lo[j] = fp.lower;
        hi[j] = fp.upper;
    }

    auto to_map = [&](Eigen::VectorXd const& v) {
        ParamMap all = spec.fixed_params;
        for (Eigen::Index j = 0; j < n_par; ++j)
        {
            all[names[static_cast<std::size_t>(j)]] = v[j];
        }
        return all;
    };
    auto residuals = [&](Eigen::VectorXd const& v) {
        auto all = to_map(v);
        Eigen::VectorXd r(n_pts);
        for (Eigen::Index i = 0; i < n_pts; ++i)
        {
            auto const& s = pts[static_cast<std::size_t>(i)];
            double w = weighted ? 1 / s.sigma : 1.0;
            r[i] = w * (s.y - model_value(spec.model_id, spec.statistics, all, s.x));
        }
        return r;
    };
    auto jacobian = [&](Eigen::VectorXd const& v) {
        auto all = to_map(v);
        Eigen::MatrixXd J(n_pts, n_par);
        for (Eigen::Index i = 0; i < n_pts; ++i)
        {
            auto const& s = pts[static_cast<std::size_t>(i)];
            double w = weighted ? 1 / s.sigma : 1.0;
            auto g = model_gradient(spec.model_id, spec.statistics, all, s.x, names);
            for (Eigen::Index j = 0; j < n_par; ++j)
            {
                J(i, j) = w * g[static_cast<std::size_t>(j)];
            }
        }
        return J;
    };

    FitResult result;
    result.model_id = spec.model_id;
    result.statistics = spec.statistics;

    Eigen::VectorXd r = residuals(p);
    double cost = r.squaredNorm();
    if (!std::isfinite(cost))
    {
        throw NumericalError("non-finite residuals at the initial point");
    }
    double lambda = 1e-3;
    bool converged = false;
    int iter = 0;
    std::string message = "iteration limit reached";
    Eigen::MatrixXd J = jacobian(p);

    for (; iter < options.max_iterations && !converged; ++iter)
    {
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        for (Eigen::Index j = 0; j < n_par; ++j)
        {
            if (!(A(j, j) > 0))
            {
                throw NumericalError("singular Jacobian: parameter '"
                                     + names[static_cast<std::size_t>(j)]
                                     + "' has no effect on the model");
            }
        }
        if (cost == 0)
        {
            converged = true;
            message = "exact fit";
            break;
        }

        bool accepted = false;
        while (!accepted)
        {
            Eigen::MatrixXd M = A;
            for (Eigen::Index j = 0; j < n_par; ++j)
            {
                M(j, j) += lambda * A(j, j);
            }
            Eigen::VectorXd delta = M.ldlt().solve(g);
            Eigen::VectorXd trial = (p + delta).cwiseMax(lo).cwiseMin(hi);
            Eigen::VectorXd step = trial - p;

            double rel_step = 0;
            for (Eigen::Index j = 0; j < n_par; ++j)
            {
                double scale = std::max(std::abs(p[j]), 1e-6 * (hi[j] - lo[j]));
                scale = std::max(scale, std::numeric_limits<double>::min());
                rel_step = std::max(rel_step, std::abs(step[j]) / scale);
            }

            Eigen::VectorXd r_trial = residuals(trial);
            double c_trial = r_trial.squaredNorm();
            if (std::isfinite(c_trial) && c_trial < cost)
            {
                double rel_cost = (cost - c_trial) / cost;
                p = trial;
                r = r_trial;
                cost = c_trial;
                J = jacobian(p);
                lambda = std::max(lambda / 10, 1e-15);
                accepted = true;
                if (rel_step < options.step_tolerance)
                {
                    converged = true;
                    message = "step tolerance reached";
                }
                else if (rel_cost < options.cost_tolerance)
                {
                    converged = true;
                    message = "cost tolerance reached";
                }
            }
            else
            {
                if (rel_step < options.step_tolerance)
                {
                    // No smaller cost within a negligible step: stationary.
                    converged = true;
                    message = "step tolerance reached";
                    break;
                }
                lambda *= 10;
                if (lambda > 1e20)
                {
                    message = "damping overflow";
                    break;
                }
            }
        }
        if (!accepted && !converged)
        {
            break;
        }
    }

    result.iterations = iter;
    result.converged = converged;
    result.message = message;
    result.residual_norm = std::sqrt(cost);
    for (Eigen::Index j = 0; j < n_par; ++j)
    {
        result.params[names[static_cast<std::size_t>(j)]] = p[j];
    }

    // Covariance from the final Jacobian; unweighted fits scale by the
    // residual variance.
    Eigen::MatrixXd A = J.transpose() * J;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.isInvertible())
    {
        Eigen::MatrixXd cov = lu.inverse();
        if (!weighted)
        {
            cov *= cost / static_cast<double>(n_pts - n_par);
        }
        for (Eigen::Index j = 0; j < n_par; ++j)
        {
            result.param_stderr[names[static_cast<std::size_t>(j)]]
                = std::sqrt(std::max(cov(j, j), 0.0));
        }
    }
    else
    {
        for (auto const& n : names)
        {
            result.param_stderr[n] = std::numeric_limits<double>::infinity();
        }
    }
    if (result.params.count("dnu_hz"))
    {
        double dnu = result.params["dnu_hz"];
        result.params["tau_c_s"] = 1 / dnu;
        result.param_stderr["tau_c_s"] = result.param_stderr["dnu_hz"] / (dnu * dnu);
    }
    if (converged)
    {
        validate(result);
    }
    return result;
}

//---------------------------------------------------------------------------//
JacobianReport jacobian_check(FitModelSpec const& spec,
                              ParamMap const& params,
                              std::span<double const> probe_points,
                              double tolerance)
{
    auto names = model_parameters(spec.model_id);
    ParamMap all = merged(spec.fixed_params, params);
    JacobianReport rep;
    for (double x : probe_points)
    {
        auto grad = model_gradient(spec.model_id, spec.statistics, all, x, names);
        for (std::size_t j = 0; j < names.size(); ++j)
        {
            double p0 = get(all, names[j]);
            double h = p0 != 0 ? 1e-6 * std::abs(p0) : 1e-6;
            ParamMap up = all, dn = all;
            up[names[j]] = p0 + h;
            dn[names[j]] = p0 - h;
            double num = (model_value(spec.model_id, spec.statistics, up, x)
                          - model_value(spec.model_id, spec.statistics, dn, x))
                         / (2 * h);
            double floor = p0 != 0 ? 1 / std::abs(p0) : 1.0;
            double err = std::abs(grad[j] - num)
                         / std::max({std::abs(grad[j]), std::abs(num), floor});
            if (err > rep.worst_error)
            {
                rep.worst_error = err;
                rep.worst_param = names[j];
                rep.worst_coordinate = x;
            }
        }
    }
    rep.ok = rep.worst_error <= tolerance;
    return rep;
}

//---------------------------------------------------------------------------//
double evaluate(FitResult const& fit, ParamMap const& fixed, double x)
{
    return model_value(fit.model_id, fit.statistics, merged(fixed, fit.params), x);
}

double extract_visibility(FitResult const& fit,
                          ParamMap const& fixed,
                          CoherenceCurve const& curve)
{
    if (!fit.converged)
    {
        throw ConfigError("visibility requires a converged fit");
    }
    if (curve.size() < 2)
    {
        throw ConfigError("visibility requires a curve with at least two points");
    }
    auto all = merged(fixed, fit.params);
    auto f = [&](double x) {
        return model_value(fit.model_id, fit.statistics, all, x);
    };
    double lo = curve.points().front().coordinate;
    double hi = curve.points().back().coordinate;
    auto mn = analytic::find_extremum(f, lo, hi, 20001, true);
    auto mx = analytic::find_extremum(f, lo, hi, 20001, false);
    double denom = mx.g2 + mn.g2;
    if (denom == 0)
    {
        throw NumericalError("visibility undefined: max + min is zero");
    }
    return (mx.g2 - mn.g2) / denom;
}

//---------------------------------------------------------------------------//
std::string to_json(FitResult const& r)
{
    nlohmann::ordered_json j;
    j["model_id"] = std::string(to_string(r.model_id));
    j["statistics"] = std::string(to_string(r.statistics));
    j["params"] = r.params;
    j["param_stderr"] = r.param_stderr;
    j["residual_norm"] = r.residual_norm;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["message"] = r.message;
    return j.dump(2);
}

FitResult fit_result_from_json(std::string_view text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
        FitResult r;
        r.model_id = parse_fit_model(j.at("model_id").get<std::string>());
        r.statistics = parse_statistics(j.at("statistics").get<std::string>());
        r.params = j.at("params").get<ParamMap>();
        r.param_stderr = j.at("param_stderr").get<ParamMap>();
        r.residual_norm = j.at("residual_norm").get<double>();
        r.iterations = j.at("iterations").get<int>();
        r.converged = j.at("converged").get<bool>();
        r.message = j.at("message").get<std::string>();
        return r;
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ConfigError(std::string("malformed fit result: ") + e.what());
    }
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::fit
