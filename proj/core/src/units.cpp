// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file units.cpp
//---------------------------------------------------------------------------//
#include "antibunch/units.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace antibunch
{
namespace
{
//---------------------------------------------------------------------------//
struct Suffix
{
    std::string_view text;
    Dimension dim;
    double scale;
};

// Longest suffixes first so "mm" is not read as "m".
constexpr std::array kSuffixes = {
    Suffix{"GHz", Dimension::frequency, 1e9},
    Suffix{"MHz", Dimension::frequency, 1e6},
    Suffix{"kHz", Dimension::frequency, 1e3},
    Suffix{"Hz", Dimension::frequency, 1.0},
    Suffix{"mm", Dimension::length, 1e-3},
    Suffix{"um", Dimension::length, 1e-6},
    Suffix{"nm", Dimension::length, 1e-9},
    Suffix{"ms", Dimension::time, 1e-3},
    Suffix{"us", Dimension::time, 1e-6},
    Suffix{"ns", Dimension::time, 1e-9},
    Suffix{"ps", Dimension::time, 1e-12},
    Suffix{"m", Dimension::length, 1.0},
    Suffix{"s", Dimension::time, 1.0},
};

std::string_view trim(std::string_view s)
{
    auto const ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string const& required(KeyValues const& kv, std::string const& key)
{
    auto it = kv.find(key);
    if (it == kv.end())
        throw ConfigError("missing key '" + key + "'");
    return it->second;
}

int parse_int(std::string const& key, std::string_view text)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("key '" + key + "' expects an integer, got '"
                          + std::string(text) + "'");
    return v;
}

//---------------------------------------------------------------------------//
}  // namespace

double parse_quantity(std::string_view text, Dimension dim)
{
    text = trim(text);
    double value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{})
        throw ConfigError("not a number: '" + std::string(text) + "'");

    auto suffix = trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));
    if (suffix.empty())
        return value;
    for (auto const& s : kSuffixes)
    {
        if (s.text != suffix)
            continue;
        if (s.dim != dim)
            throw ConfigError("unit '" + std::string(suffix)
                              + "' has the wrong dimension in '"
                              + std::string(text) + "'");
        return value * s.scale;
    }
    throw ConfigError("unknown unit '" + std::string(suffix) + "' in '"
                      + std::string(text) + "'");
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

//---------------------------------------------------------------------------//
// KEY-VALUE RECORDS
//---------------------------------------------------------------------------//
KeyValues parse_key_values(std::string_view text)
{
    KeyValues kv;
    std::size_t lineno = 0;
    while (!text.empty())
    {
        ++lineno;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{}
                                              : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineno)
                              + ": expected key=value");
        auto key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno)
                              + ": empty key");
        kv[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return kv;
}

std::string write_key_values(KeyValues const& kv)
{
    std::string out;
    for (auto const& [k, v] : kv)
    {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

void put(KeyValues& kv, SourceSpec const& s, std::string const& prefix)
{
    kv[prefix + "l"] = format_double(s.length_m);
    kv[prefix + "center_x"] = format_double(s.center_x_m);
    kv[prefix + "lambda"] = format_double(s.wavelength_m);
    kv[prefix + "dnu"] = format_double(s.bandwidth_hz);
    kv[prefix + "n_subsources"] = std::to_string(s.n_subsources);
    kv[prefix + "n_modes"] = std::to_string(s.n_modes);
}

void put(KeyValues& kv, GeometrySpec const& g)
{
    kv["geometry"] = std::string(to_string(g.kind));
    kv["z"] = format_double(g.z_m);
    if (g.d_m)
        kv["d"] = format_double(*g.d_m);
    else
        kv.erase("d");
}

SourceSpec get_source(KeyValues const& kv, std::string const& prefix)
{
    SourceSpec s;
    auto opt = [&](std::string const& key) -> std::string const* {
        auto it = kv.find(prefix + key);
        if (it == kv.end() && !prefix.empty())
            it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto req = [&](std::string const& key) -> std::string const& {
        if (auto const* v = opt(key))
            return *v;
        return required(kv, prefix + key);
    };

    s.length_m = parse_quantity(req("l"), Dimension::length);
    s.wavelength_m = parse_quantity(req("lambda"), Dimension::length);
    if (auto const* v = opt("center_x"))
        s.center_x_m = parse_quantity(*v, Dimension::length);
    if (auto const* v = opt("dnu"))
    {
        s.bandwidth_hz = parse_quantity(*v, Dimension::frequency);
    }
    else if (auto const* tc = opt("tau_c"))
    {
        double tau = parse_quantity(*tc, Dimension::time);
        if (!(tau > 0))
            throw ConfigError("tau_c must be positive");
        s.bandwidth_hz = 1.0 / tau;
    }
    if (auto const* v = opt("n_subsources"))
        s.n_subsources = parse_int(prefix + "n_subsources", *v);
    if (auto const* v = opt("n_modes"))
        s.n_modes = parse_int(prefix + "n_modes", *v);
    return s;
}

GeometrySpec get_geometry(KeyValues const& kv)
{
    GeometrySpec g;
    if (auto it = kv.find("geometry"); it != kv.end())
        g.kind = parse_interferometer(it->second);
    g.z_m = parse_quantity(required(kv, "z"), Dimension::length);
    if (auto it = kv.find("d"); it != kv.end())
        g.d_m = parse_quantity(it->second, Dimension::length);
    return g;
}

//---------------------------------------------------------------------------//
}  // namespace antibunch
