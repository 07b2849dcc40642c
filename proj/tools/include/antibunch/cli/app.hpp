// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/cli/app.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>

namespace antibunch::cli
{
//! Parse arguments, run, and map failures to exit codes.
int run_app(int argc, char const* const* argv, std::ostream& out, std::ostream& err);
}  // namespace antibunch::cli
