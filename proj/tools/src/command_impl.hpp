// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file command_impl.hpp
//! Internal plumbing shared by the command implementations.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "antibunch/cli/commands.hpp"
#include "antibunch/mc.hpp"
#include "antibunch/types.hpp"
#include "antibunch/units.hpp"

namespace antibunch::cli::detail
{
//---------------------------------------------------------------------------//
using Json = nlohmann::ordered_json;

struct CommandResult
{
    //! File name (relative to the output dir) and contents.
    std::vector<std::pair<std::string, std::string>> files;
    Json results = Json::object();
    bool not_converged{false};

    void add(std::string name, std::string text)
    {
        files.emplace_back(std::move(name), std::move(text));
    }
};

std::string const& require(KeyValues const& kv, std::string const& key);
double quantity(KeyValues const& kv, std::string const& key, Dimension dim);
long long integer(KeyValues const& kv, std::string const& key);
bool flag(KeyValues const& kv, std::string const& key);
std::uint64_t seed_of(KeyValues const& kv);

//! Scan coordinates from min/max/points in the axis' dimension.
std::vector<double> scan_coordinates(KeyValues const& kv, AxisKind axis);
AxisKind axis_of(KeyValues const& kv);

//! "all" expands to boson, fermion, classical.
std::vector<ParticleStatistics> statistics_list(std::string const& s);

mc::McConfig mc_config(KeyValues const& kv, unsigned workers);

//! Fixed-precision number for human-readable reports.
std::string fixed(double v, int digits);

CommandResult run_analytic(KeyValues const& kv, RunContext const& ctx);
CommandResult run_mc(KeyValues const& kv, RunContext const& ctx);
CommandResult run_events(KeyValues const& kv, RunContext const& ctx);
CommandResult run_fit(KeyValues const& kv, RunContext const& ctx);
CommandResult run_reproduce(KeyValues const& kv, RunContext const& ctx);

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli::detail
