// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

// Reference kernels for the pruned all-pairs comparison. The OpenMP kernel in
// pairwise_omp.cpp is tested against these.

#include <evmclone/errors.hpp>
#include <evmclone/similarity.hpp>

namespace evmclone
{
std::vector<similarity_pair> pairwise_compare_serial(
    std::span<const compare_entry> entries, double threshold)
{
    return pairwise_compare_partition(entries, threshold, 0, 1);
}

std::vector<similarity_pair> pairwise_compare_partition(std::span<const compare_entry> entries,
    double threshold, size_t part, size_t parts)
{
    validate_threshold(threshold);
    if (parts == 0 || part >= parts)
        throw config_error("partition index out of range");

    std::vector<similarity_pair> out;
    similarity_pair pair;
    // Rows are dealt round-robin so early (long) rows spread across workers.
    for (size_t i = part; i < entries.size(); i += parts)
    {
        for (size_t j = i + 1; j < entries.size(); ++j)
        {
            if (score_candidate(entries[i], entries[j], threshold, pair))
                out.push_back(std::move(pair));
        }
    }
    canonical_sort(out);
    return out;
}
}  // namespace evmclone
