// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/cluster.hpp>
#include <evmclone/evm_core.hpp>
#include <evmclone/similarity.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
enum class vuln_type : uint8_t
{
    reentrancy,
    overflow,
    cross_function_race,
    mismatched_constructor,
    ownership_takeover,
    manipulable_suicide,
    erc20,
};

inline constexpr size_t vuln_type_count = 7;

std::string_view to_string(vuln_type t) noexcept;
/// Accepts the names produced by to_string. Throws format_error otherwise.
vuln_type parse_vuln_type(std::string_view name);

/// Scanner findings for one contract: count per vulnerability type.
struct vuln_profile
{
    std::string contract;
    std::array<uint32_t, vuln_type_count> counts{};

    bool vulnerable() const noexcept;
    friend bool operator==(const vuln_profile&, const vuln_profile&) = default;
};

enum class author_relation : uint8_t
{
    same_author,
    different_author,
};

enum class behavior : uint8_t
{
    neither_vulnerable,
    both_same_behavior,
    one_vulnerable,
    both_overlapped,
    both_not_overlapped,
};

inline constexpr size_t behavior_count = 5;

std::string_view to_string(author_relation r) noexcept;
std::string_view to_string(behavior b) noexcept;

struct provenance_cell
{
    author_relation author = author_relation::different_author;
    behavior kind = behavior::neither_vulnerable;

    friend bool operator==(const provenance_cell&, const provenance_cell&) = default;
};

/// Vulnerability behavior of two profiles. Symmetric.
behavior classify_behavior(const vuln_profile& v1, const vuln_profile& v2) noexcept;

using profile_map = std::map<std::string, vuln_profile>;
using author_map = std::map<std::string, std::string>;  ///< contract -> deployer

/// Throws missing_profile when either contract lacks a profile or a deployer.
provenance_cell classify_pair(const similarity_pair& p, const profile_map& profiles,
    const author_map& authors);

struct provenance_table
{
    /// [author_relation][behavior]
    std::array<std::array<uint64_t, behavior_count>, 2> cells{};
    uint64_t skipped_missing = 0;  ///< pairs without profiles, not in any cell

    uint64_t total(behavior b) const noexcept;
    uint64_t total() const noexcept;
    /// Pairs with identical non-empty findings over all classified pairs.
    double same_vulnerability_ratio() const noexcept;
    /// Fixed-width text rendering with a totals row.
    std::string render() const;
};

provenance_table build_provenance_table(std::span<const similarity_pair> pairs,
    const profile_map& profiles, const author_map& authors);

struct duplicate_row
{
    size_t rank = 0;
    std::string representative;
    digest256 token_hash;
    size_t size = 0;
};

/// Groups ranked by size, largest first; ties by representative id. The rows
/// double as the rank/size series.
std::vector<duplicate_row> duplicate_stats(const std::vector<duplicate_group>& groups);

struct pareto_point
{
    size_t rank = 0;          ///< 1-based
    double cluster_share = 0;  ///< rank / cluster count, percent
    double cumulative_share = 0;  ///< percent of all contracts in the top `rank` clusters
};

struct pareto_summary
{
    std::vector<pareto_point> cdf;
    double top1_share = 0;   ///< percent held by the top 1% of clusters
    double top20_share = 0;  ///< percent held by the top 20% of clusters
    size_t cluster_count = 0;
    uint64_t contract_count = 0;
};

/// Share of contracts held by the largest ceil(percent% * n) clusters (at least one).
double top_share(std::span<const uint64_t> sizes_desc, double percent);

/// Throws error on an empty size list.
pareto_summary pareto_report(std::vector<uint64_t> cluster_sizes);

/// Readout line such as "top 20%: 60.0%".
std::string format_top_share(double percent_of_clusters, double share);
}  // namespace evmclone
