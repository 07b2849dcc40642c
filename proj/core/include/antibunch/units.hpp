// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/units.hpp
//! Unit-suffixed quantity parsing and the flat key-value record format.
//---------------------------------------------------------------------------//
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "types.hpp"

namespace antibunch
{
//---------------------------------------------------------------------------//
enum class Dimension
{
    length,
    time,
    frequency,
    dimensionless,
};

/*!
 * Parse a number with an optional unit suffix into SI.
 *
 * Accepted suffixes: m, mm, um, nm (length); s, ms, us, ns, ps (time);
 * Hz, kHz, MHz, GHz (frequency). A bare number is taken as SI. A suffix of
 * the wrong dimension is a ConfigError.
 */
double parse_quantity(std::string_view text, Dimension dim);

//! Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

//---------------------------------------------------------------------------//
//! Ordered key-value record; the on-disk form is one "key=value" per line.
using KeyValues = std::map<std::string, std::string>;

//! '#' starts a comment; blank lines ignored; duplicate keys: last wins.
KeyValues parse_key_values(std::string_view text);
std::string write_key_values(KeyValues const& kv);

//! Prefix distinguishes multiple sources ("source1.", "source2.").
void put(KeyValues& kv, SourceSpec const& s, std::string const& prefix = "");
void put(KeyValues& kv, GeometrySpec const& g);

SourceSpec get_source(KeyValues const& kv, std::string const& prefix = "");
GeometrySpec get_geometry(KeyValues const& kv);

//---------------------------------------------------------------------------//
}  // namespace antibunch
