// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/random.hpp
//! Counter-style seeding: every random stream is a function of a seed path.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>

namespace antibunch
{
//---------------------------------------------------------------------------//
using Engine = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20160503;

//! Engine for (seed, stream, index); distinct paths give independent streams.
inline Engine make_engine(std::uint64_t seed,
                          std::uint64_t stream,
                          std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return Engine(seq);
}

//! Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& eng)
{
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

//---------------------------------------------------------------------------//
}  // namespace antibunch
