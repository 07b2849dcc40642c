// Copyright 2026 The antibunch Authors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file antibunch/parallel.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace antibunch
{
//---------------------------------------------------------------------------//
//! Worker count: 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/*!
 * Run task(i) for i in [0, n) on up to \c workers threads.
 *
 * Tasks must write only to their own slot; callers reduce the slots in index
 * order afterwards so results do not depend on scheduling.
 */
template<class F>
void parallel_for_index(std::size_t n, unsigned workers, F&& task)
{
    workers = resolve_workers(workers);
    if (workers <= 1 || n <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            task(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                task(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    auto count = std::min<std::size_t>(workers, n);
    pool.reserve(count - 1);
    for (std::size_t w = 1; w < count; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
}  // namespace antibunch
