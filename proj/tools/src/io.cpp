// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file io.cpp
//---------------------------------------------------------------------------//
#include "antibunch/cli/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "antibunch/units.hpp"

namespace antibunch::cli
{
namespace
{
std::vector<std::string> split(std::string const& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep))
    {
        out.push_back(cell);
    }
    return out;
}

double to_number(std::string const& s, std::size_t line)
{
    try
    {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size())
        {
            throw std::invalid_argument(s);
        }
        return v;
    }
    catch (std::exception const&)
    {
        throw ConfigError("curve line " + std::to_string(line)
                          + ": bad number '" + s + "'");
    }
}
}  // namespace

//---------------------------------------------------------------------------//
std::string curve_csv(CoherenceCurve const& curve)
{
    std::ostringstream os;
    os << "coordinate,g2,stderr,flagged\n";
    for (auto const& p : curve.points())
    {
        os << format_double(p.coordinate) << ',' << format_double(p.g2) << ','
           << format_double(p.stderr_) << ',' << (p.flagged ? 1 : 0) << '\n';
    }
    return os.str();
}

CoherenceCurve parse_curve_csv(std::string const& text,
                               AxisKind axis,
                               CurveMetadata const& meta)
{
    std::istringstream is(text);
    std::string line;
    std::vector<CurvePoint> points;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line))
    {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
        {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#')
        {
            continue;
        }
        if (!header)
        {
            header = true;
            if (line.rfind("coordinate", 0) == 0)
            {
                continue;
            }
        }
        auto cells = split(line, ',');
        if (cells.size() < 2 || cells.size() > 4)
        {
            throw ConfigError("curve line " + std::to_string(lineno)
                              + ": expected 2 to 4 columns");
        }
        CurvePoint p;
        p.coordinate = to_number(cells[0], lineno);
        p.g2 = to_number(cells[1], lineno);
        if (cells.size() > 2)
        {
            p.stderr_ = to_number(cells[2], lineno);
        }
        if (cells.size() > 3)
        {
            p.flagged = to_number(cells[3], lineno) != 0;
        }
        points.push_back(p);
    }
    auto m = meta;
    bool any_err = false;
    for (auto const& p : points)
    {
        any_err = any_err || p.stderr_ > 0;
    }
    if (any_err && m.generator == Generator::analytic)
    {
        m.generator = Generator::mc;
    }
    return CoherenceCurve(axis, std::move(points), m);
}

std::string histogram_csv(events::CoincidenceHistogram const& h)
{
    std::ostringstream os;
    os << "lag_s,count\n";
    for (std::size_t i = 0; i < h.centers.size(); ++i)
    {
        os << format_double(h.centers[i]) << ',' << h.counts[i] << '\n';
    }
    return os.str();
}

std::string read_file(std::filesystem::path const& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
    {
        throw ConfigError("cannot read '" + path.string() + "'");
    }
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void write_file(std::filesystem::path const& path, std::string const& text)
{
    if (path.has_parent_path())
    {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
    {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
    os << text;
    if (!os)
    {
        throw ConfigError("write failed for '" + path.string() + "'");
    }
}

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli
