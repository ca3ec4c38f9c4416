// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/evm_core.hpp>
#include <evmclone/similarity.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evmclone
{
struct weighted_edge
{
    std::string a;  ///< a < b
    std::string b;
    double weight = 0.0;
};

struct similarity_graph
{
    std::vector<std::string> nodes;  ///< sorted, unique
    std::vector<weighted_edge> edges;  ///< sorted by (a, b), one per unordered pair
};

/// Nodes are `nodes` plus every endpoint in `pairs`; an edge exists for each
/// pair scoring at least `threshold`.
similarity_graph build_graph(std::span<const similarity_pair> pairs, double threshold,
    std::span<const std::string> nodes = {});

/// Disjoint-set forest with path compression and union by size.
class disjoint_set
{
public:
    explicit disjoint_set(size_t n);

    size_t find(size_t x) noexcept;
    /// Returns false when x and y were already joined.
    bool unite(size_t x, size_t y) noexcept;
    size_t size_of(size_t x) noexcept { return size_[find(x)]; }

private:
    std::vector<size_t> parent_;
    std::vector<size_t> size_;
};

struct contract_cluster
{
    std::vector<std::string> members;  ///< sorted distinct contract ids
    size_t total_population = 0;       ///< members plus their duplicates
    std::optional<std::string> label;
};

struct clustering
{
    /// Components with two or more members, largest first, then by first member.
    std::vector<contract_cluster> clusters;
    /// Isolated nodes, sorted.
    std::vector<std::string> singletons;
};

clustering connected_components(const similarity_graph& g);

/// Representative id -> number of contracts in its duplicate group.
std::map<std::string, size_t> group_sizes(const std::vector<duplicate_group>& groups);

/// Fills total_population. Throws unknown_representative when a member has no group.
std::vector<contract_cluster> expand_with_duplicates(std::vector<contract_cluster> clusters,
    const std::map<std::string, size_t>& sizes);

/// Population-descending report order; ties by member count, then first member.
void sort_by_population(std::vector<contract_cluster>& clusters);

/// Attaches the first matching label found among a cluster's members.
void apply_labels(std::vector<contract_cluster>& clusters,
    const std::map<std::string, std::string>& member_labels);

/// "253 (509)": distinct members, then population with duplicates.
std::string format_cluster_size(const contract_cluster& c);
}  // namespace evmclone
