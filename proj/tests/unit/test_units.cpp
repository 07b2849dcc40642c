// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_units.cpp
//---------------------------------------------------------------------------//
#include <doctest.h>

#include "antibunch/units.hpp"

using namespace antibunch;

TEST_CASE("quantities parse to SI")
{
    CHECK(parse_quantity("0.59mm", Dimension::length) == doctest::Approx(0.59e-3));
    CHECK(parse_quantity("780nm", Dimension::length) == doctest::Approx(780e-9));
    CHECK(parse_quantity("910 mm", Dimension::length) == doctest::Approx(0.91));
    CHECK(parse_quantity("296ns", Dimension::time) == doctest::Approx(296e-9));
    CHECK(parse_quantity("3us", Dimension::time) == doctest::Approx(3e-6));
    CHECK(parse_quantity("3.378MHz", Dimension::frequency) == doctest::Approx(3.378e6));
    CHECK(parse_quantity("50kHz", Dimension::frequency) == doctest::Approx(5e4));
    CHECK(parse_quantity("0.02", Dimension::dimensionless) == 0.02);
    CHECK(parse_quantity("1e-3", Dimension::length) == 1e-3);
}

TEST_CASE("bad quantities are config errors")
{
    CHECK_THROWS_AS(parse_quantity("5ns", Dimension::length), ConfigError);
    CHECK_THROWS_AS(parse_quantity("5 furlongs", Dimension::length), ConfigError);
    CHECK_THROWS_AS(parse_quantity("", Dimension::time), ConfigError);
    CHECK_THROWS_AS(parse_quantity("mm", Dimension::length), ConfigError);
}

TEST_CASE("format_double round-trips exactly")
{
    for (double v : {0.1, 1.0 / 3, 296e-9, -2.5e-300, 1e22, 0.0})
    {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("key-value text")
{
    auto kv = parse_key_values("# comment\nl = 0.59mm\n\nz=910mm  # trailing\n");
    CHECK(kv.size() == 2);
    CHECK(kv.at("l") == "0.59mm");
    CHECK(kv.at("z") == "910mm");
    CHECK_THROWS_AS(parse_key_values("no equals sign"), ConfigError);
    CHECK(parse_key_values(write_key_values(kv)) == kv);
}

TEST_CASE("source and geometry round trip through key-values")
{
    SourceSpec s;
    s.length_m = 0.59e-3;
    s.center_x_m = -1e-3;
    s.wavelength_m = 780e-9;
    s.bandwidth_hz = 1 / 296e-9;
    s.n_subsources = 150;
    s.n_modes = 8;
    GeometrySpec g{InterferometerKind::hom, 0.91, 5e-3};
    KeyValues kv;
    put(kv, s);
    put(kv, g);
    CHECK(get_source(kv) == s);
    CHECK(get_geometry(kv) == g);

    KeyValues prefixed;
    put(prefixed, s, "s2_");
    prefixed["lambda"] = "780nm";
    prefixed.erase("s2_lambda");
    CHECK(get_source(prefixed, "s2_").wavelength_m == doctest::Approx(780e-9));
}

TEST_CASE("tau_c is accepted in place of dnu")
{
    KeyValues kv{{"l", "0.55mm"}, {"lambda", "780nm"}, {"tau_c", "296ns"}};
    CHECK(get_source(kv).bandwidth_hz == doctest::Approx(1 / 296e-9));
    kv["tau_c"] = "0";
    CHECK_THROWS_AS(get_source(kv), ConfigError);
}
