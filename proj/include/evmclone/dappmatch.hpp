// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/cluster.hpp>
#include <evmclone/similarity.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace evmclone
{
struct dapp_manifest
{
    std::string name;
    std::vector<std::string> contracts;
    std::vector<std::string> deployers;
    double volume = 0.0;  ///< ETH
    int64_t deployed_at = 0;
    std::optional<std::string> category;
};

/// Dense row-major |A| x |B| matrix of contract similarity scores.
class weight_matrix
{
public:
    weight_matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {}
    weight_matrix(std::initializer_list<std::initializer_list<double>> rows);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    double& operator()(size_t r, size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(size_t r, size_t c) const noexcept { return data_[r * cols_ + c]; }

private:
    size_t rows_;
    size_t cols_;
    std::vector<double> data_;
};

struct matched_edge
{
    size_t left = 0;   ///< row
    size_t right = 0;  ///< column
    double weight = 0.0;
};

struct match_result
{
    std::vector<matched_edge> edges;  ///< sorted by row, padding excluded
    double total_weight = 0.0;
};

/// Maximum-weight bipartite matching (Kuhn-Munkres, O(n^3)). Rectangular
/// input is padded to square with zero-weight dummies, which never appear in
/// the result. Throws empty_matching when either side is empty.
match_result km_match(const weight_matrix& weights);

/// What dapp matching needs to know about one contract address.
struct contract_profile
{
    digest256 token_hash;
    meta_attributes meta;
    fingerprint fp;
};

using profile_lookup = std::map<std::string, contract_profile>;
using template_set = std::set<digest256>;

struct reduced_dapp
{
    std::vector<std::string> contracts;
    bool template_only = false;
};

/// Drops contracts whose token hash is a known template. Throws
/// unknown_contract for an address missing from `profiles`.
reduced_dapp exclude_templates(const dapp_manifest& d, const template_set& templates,
    const profile_lookup& profiles);

/// Contract weights are similarity scores; pruned pairs weigh 0.
weight_matrix contract_weights(const std::vector<std::string>& left,
    const std::vector<std::string>& right, const profile_lookup& profiles);

/// Matched weight divided by the source side's contract count.
double directional_similarity(const std::vector<std::string>& source,
    const std::vector<std::string>& target, const profile_lookup& profiles);

/// max of both directions, after template exclusion. Throws template_only when
/// either DApp has no contracts left.
double dapp_similarity(const dapp_manifest& d1, const dapp_manifest& d2,
    const profile_lookup& profiles, const template_set& templates = {});

bool share_deployer(const dapp_manifest& d1, const dapp_manifest& d2);

/// Earliest deployment first, ties by name.
bool dapp_deployed_before(const dapp_manifest& a, const dapp_manifest& b) noexcept;

struct dapp_clone_pair
{
    std::string original;
    std::string clone;
    double score = 0.0;

    friend bool operator==(const dapp_clone_pair&, const dapp_clone_pair&) = default;
};

struct dapp_clone_cluster
{
    std::string original;
    std::vector<std::string> clones;  ///< deployment order

    friend bool operator==(const dapp_clone_cluster&, const dapp_clone_cluster&) = default;
};

struct clone_detection
{
    std::vector<dapp_clone_pair> pairs;  ///< sorted by (original, clone)
    std::vector<dapp_clone_cluster> clusters;  ///< largest first, then by original
    std::vector<std::string> template_only;  ///< excluded DApps, sorted
};

clone_detection detect_clones(const std::vector<dapp_manifest>& dapps,
    const profile_lookup& profiles, const template_set& templates = {},
    double threshold = default_threshold);

struct volume_row
{
    std::string original;
    size_t clone_count = 0;
    double original_volume = 0.0;
    double plagiarized_volume = 0.0;
    std::optional<double> ratio;  ///< plagiarized / original; empty when original is 0
};

struct volume_report
{
    std::vector<volume_row> rows;  ///< by clone count descending, then original name
    volume_row totals;
};

volume_report volume_impact(const std::vector<dapp_clone_cluster>& clusters,
    const std::vector<dapp_manifest>& dapps);

/// Percent with two decimals: "305.87%", "<0.01%" for tiny positive ratios,
/// "n/a" when undefined.
std::string format_ratio(const std::optional<double>& ratio);

/// Three decimals with thousands separators: "1,012.649".
std::string format_volume(double volume);
}  // namespace evmclone
