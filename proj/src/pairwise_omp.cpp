// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/errors.hpp>
#include <evmclone/similarity.hpp>

#include <omp.h>

#include <exception>
#include <mutex>

namespace evmclone
{
std::vector<similarity_pair> pairwise_compare(
    std::span<const compare_entry> entries, double threshold, int workers)
{
    validate_threshold(threshold);
    if (workers < 1)
        throw config_error("worker count must be at least 1");

    const auto n = static_cast<std::ptrdiff_t>(entries.size());
    std::vector<std::vector<similarity_pair>> per_thread(static_cast<size_t>(workers));
    std::exception_ptr failure;
    std::mutex failure_mutex;

#pragma omp parallel num_threads(workers)
    {
        auto& mine = per_thread[static_cast<size_t>(omp_get_thread_num())];
        similarity_pair pair;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < n; ++i)
        {
            try
            {
                for (std::ptrdiff_t j = i + 1; j < n; ++j)
                {
                    if (score_candidate(entries[static_cast<size_t>(i)],
                            entries[static_cast<size_t>(j)], threshold, pair))
                        mine.push_back(std::move(pair));
                }
            }
            catch (...)
            {
                const std::lock_guard lock{failure_mutex};
                if (!failure)
                    failure = std::current_exception();
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<similarity_pair> out;
    for (auto& part : per_thread)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
            std::make_move_iterator(part.end()));
    canonical_sort(out);
    return out;
}
}  // namespace evmclone
