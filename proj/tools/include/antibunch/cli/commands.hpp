// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/cli/commands.hpp
//! Subcommands of the antibunch tool, driven by flat key=value configs.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "antibunch/units.hpp"

namespace antibunch::cli
{
//---------------------------------------------------------------------------//
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_config = 2,
    exit_numerical = 3,
    exit_not_converged = 4,
};

//! Thrown by a command that finished writing its outputs but whose fit did
//! not converge.
class NotConvergedError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct ConfigKey
{
    std::string key;
    std::string default_value;  //!< empty: no default
    std::string help;
};

//! Known keys of a command, in display order.
std::vector<ConfigKey> const& command_keys(std::string const& command);
std::vector<std::string> const& command_names();

//! Execution settings that do not affect output bytes.
struct RunContext
{
    std::filesystem::path out_dir{"."};
    unsigned workers{0};
    std::ostream* out{nullptr};
    std::ostream* err{nullptr};
};

//! Default output directory: ANTIBUNCH_OUT_DIR if set, else ".".
std::filesystem::path default_out_dir();

/*!
 * Merge defaults under the given keys and reject unknown keys.
 *
 * Defaults that do not apply to the selected geometry/axis are dropped so
 * the result validates.
 */
KeyValues resolve_config(std::string const& command, KeyValues const& given);

/*!
 * Run a command on a resolved config.
 *
 * Writes <name>.json metadata (command, resolved config, results, versions)
 * and <name>.timing.json beside the data files. Re-running from the
 * metadata's config reproduces every file except the timing record.
 */
void run_command(std::string const& command, KeyValues const& config, RunContext const& ctx);

//! Command and config stored in a metadata file.
std::pair<std::string, KeyValues> load_metadata(std::filesystem::path const& path);

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli
