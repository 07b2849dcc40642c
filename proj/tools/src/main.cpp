// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file main.cpp
//---------------------------------------------------------------------------//
#include <iostream>

#include "antibunch/cli/app.hpp"

int main(int argc, char** argv)
{
    return antibunch::cli::run_app(argc, argv, std::cout, std::cerr);
}
