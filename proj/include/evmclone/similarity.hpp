// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/fingerprint.hpp>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
inline constexpr double default_threshold = 70.0;
inline constexpr double default_prune_floor = 40.0;

/// Cheap structural attributes compared before any fingerprint work.
struct meta_attributes
{
    size_t opcode_count = 0;
    size_t block_count = 0;
    size_t runtime_byte_len = 0;

    friend auto operator<=>(const meta_attributes&, const meta_attributes&) = default;
};

meta_attributes meta_of(const tokenized_code& code) noexcept;

/// Levenshtein distance with unit costs. Memory is linear in the shorter input.
size_t edit_distance(std::string_view a, std::string_view b);

/// (1 - distance / max(len1, len2)) * 100. Throws degenerate_pair if both are empty.
double similarity_score(const fingerprint& fp1, const fingerprint& fp2);
double similarity_score(std::string_view fp1, std::string_view fp2);

/// One-decimal rendering used in every report ("88.0").
std::string format_score(double score);

/// Throws config_error unless 0 <= threshold <= 100.
void validate_threshold(double threshold, std::string_view what = "threshold");

/// An attribute differs when |x - y| / max(x, y) exceeds this.
inline constexpr double prune_relative_difference = 0.30;
/// A pair is skipped once this many of the three attributes differ.
inline constexpr int prune_skip_min_differing = 2;

bool attribute_differs(size_t x, size_t y) noexcept;
int differing_attributes(const meta_attributes& m1, const meta_attributes& m2) noexcept;

/// True when the pair should be compared, false when it is skipped.
inline bool prune_filter(const meta_attributes& m1, const meta_attributes& m2) noexcept
{
    return differing_attributes(m1, m2) < prune_skip_min_differing;
}

struct compare_entry
{
    std::string id;
    meta_attributes meta;
    fingerprint fp;
};

/// Unordered pair, stored with a < b.
struct similarity_pair
{
    std::string a;
    std::string b;
    double score = 0.0;

    friend bool operator==(const similarity_pair&, const similarity_pair&) = default;
};

/// Builds the canonical (a < b) pair.
similarity_pair make_pair(std::string_view x, std::string_view y, double score);

/// Sorts by (a, b).
void canonical_sort(std::vector<similarity_pair>& pairs);

/// Scores one candidate pair. Returns false when it is pruned or falls below
/// the threshold.
bool score_candidate(const compare_entry& x, const compare_entry& y, double threshold,
    similarity_pair& out);

/// Single-threaded reference: every unordered pair, canonically sorted.
std::vector<similarity_pair> pairwise_compare_serial(
    std::span<const compare_entry> entries, double threshold = default_threshold);

/// The share of the pair space owned by worker `part` of `parts`. Outputs of
/// all parts concatenated and sorted equal the serial result.
std::vector<similarity_pair> pairwise_compare_partition(std::span<const compare_entry> entries,
    double threshold, size_t part, size_t parts);

/// OpenMP version of pairwise_compare_serial with `workers` threads.
std::vector<similarity_pair> pairwise_compare(std::span<const compare_entry> entries,
    double threshold = default_threshold, int workers = 1);
}  // namespace evmclone
