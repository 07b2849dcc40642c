// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/cli/io.hpp
//! Dataset files written and read by the command-line tool.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <string>

#include "antibunch/events.hpp"
#include "antibunch/types.hpp"

namespace antibunch::cli
{
//---------------------------------------------------------------------------//
//! Header plus one row per point: coordinate,g2,stderr,flagged.
std::string curve_csv(CoherenceCurve const& curve);

//! Parse curve_csv output; axis and metadata come from the caller.
CoherenceCurve parse_curve_csv(std::string const& text,
                               AxisKind axis,
                               CurveMetadata const& meta);

//! Header plus one row per bin: lag_s,count.
std::string histogram_csv(events::CoincidenceHistogram const& h);

std::string read_file(std::filesystem::path const& path);

//! Write text, creating parent directories. Throws ConfigError on failure.
void write_file(std::filesystem::path const& path, std::string const& text);

//---------------------------------------------------------------------------//
}  // namespace antibunch::cli
