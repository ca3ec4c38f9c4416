// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/analytics.hpp>
#include <evmclone/errors.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace evmclone
{
namespace
{
constexpr std::array<std::string_view, vuln_type_count> vuln_names = {
    "reentrancy",
    "overflow",
    "cross_function_race",
    "mismatched_constructor",
    "ownership_takeover",
    "manipulable_suicide",
    "erc20",
};

constexpr std::array<std::string_view, behavior_count> behavior_names = {
    "neither_vulnerable",
    "both_same_behavior",
    "one_vulnerable",
    "both_overlapped",
    "both_not_overlapped",
};
}  // namespace

std::string_view to_string(vuln_type t) noexcept
{
    return vuln_names[static_cast<size_t>(t)];
}

vuln_type parse_vuln_type(std::string_view name)
{
    for (size_t i = 0; i < vuln_names.size(); ++i)
    {
        if (vuln_names[i] == name)
            return static_cast<vuln_type>(i);
    }
    throw format_error(fmt::format("unknown vulnerability type '{}'", name));
}

std::string_view to_string(author_relation r) noexcept
{
    return r == author_relation::same_author ? "same_author" : "different_author";
}

std::string_view to_string(behavior b) noexcept
{
    return behavior_names[static_cast<size_t>(b)];
}

bool vuln_profile::vulnerable() const noexcept
{
    return std::any_of(counts.begin(), counts.end(), [](uint32_t c) { return c != 0; });
}

behavior classify_behavior(const vuln_profile& v1, const vuln_profile& v2) noexcept
{
    const bool a = v1.vulnerable();
    const bool b = v2.vulnerable();
    if (!a && !b)
        return behavior::neither_vulnerable;
    if (a != b)
        return behavior::one_vulnerable;
    if (v1.counts == v2.counts)
        return behavior::both_same_behavior;
    for (size_t i = 0; i < vuln_type_count; ++i)
    {
        if (v1.counts[i] != 0 && v2.counts[i] != 0)
            return behavior::both_overlapped;
    }
    return behavior::both_not_overlapped;
}

provenance_cell classify_pair(const similarity_pair& p, const profile_map& profiles,
    const author_map& authors)
{
    const auto lookup = [](const auto& map, const std::string& id, std::string_view what) {
        const auto it = map.find(id);
        if (it == map.end())
            throw missing_profile(fmt::format("no {} for contract {}", what, id));
        return it;
    };
    const auto& v1 = lookup(profiles, p.a, "vulnerability profile")->second;
    const auto& v2 = lookup(profiles, p.b, "vulnerability profile")->second;
    const auto& d1 = lookup(authors, p.a, "deployer")->second;
    const auto& d2 = lookup(authors, p.b, "deployer")->second;
    return {d1 == d2 ? author_relation::same_author : author_relation::different_author,
        classify_behavior(v1, v2)};
}

uint64_t provenance_table::total(behavior b) const noexcept
{
    const auto k = static_cast<size_t>(b);
    return cells[0][k] + cells[1][k];
}

uint64_t provenance_table::total() const noexcept
{
    uint64_t sum = 0;
    for (const auto& row : cells)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

double provenance_table::same_vulnerability_ratio() const noexcept
{
    const auto all = total();
    if (all == 0)
        return 0.0;
    return static_cast<double>(total(behavior::both_same_behavior)) / static_cast<double>(all);
}

std::string provenance_table::render() const
{
    std::string out = fmt::format("{:<18}", "");
    for (const auto name : behavior_names)
        out += fmt::format(" {:>20}", name);
    out += fmt::format(" {:>12}\n", "total");

    const auto row = [&](std::string_view label, const auto& values) {
        out += fmt::format("{:<18}", label);
        uint64_t sum = 0;
        for (const auto v : values)
        {
            out += fmt::format(" {:>20}", v);
            sum += v;
        }
        out += fmt::format(" {:>12}\n", sum);
    };
    row(to_string(author_relation::same_author), cells[0]);
    row(to_string(author_relation::different_author), cells[1]);
    std::array<uint64_t, behavior_count> totals{};
    for (size_t k = 0; k < behavior_count; ++k)
        totals[k] = total(static_cast<behavior>(k));
    row("total", totals);
    out += fmt::format("same vulnerability behaviors (both vulnerable): {:.2f}%\n",
        same_vulnerability_ratio() * 100.0);
    return out;
}

provenance_table build_provenance_table(std::span<const similarity_pair> pairs,
    const profile_map& profiles, const author_map& authors)
{
    provenance_table table;
    for (const auto& p : pairs)
    {
        try
        {
            const auto cell = classify_pair(p, profiles, authors);
            ++table.cells[static_cast<size_t>(cell.author)][static_cast<size_t>(cell.kind)];
        }
        catch (const missing_profile&)
        {
            ++table.skipped_missing;
        }
    }
    return table;
}

std::vector<duplicate_row> duplicate_stats(const std::vector<duplicate_group>& groups)
{
    std::vector<duplicate_row> rows;
    rows.reserve(groups.size());
    for (const auto& g : groups)
        rows.push_back({0, g.representative, g.token_hash, g.members.size()});
    std::sort(rows.begin(), rows.end(), [](const duplicate_row& x, const duplicate_row& y) {
        if (x.size != y.size)
            return x.size > y.size;
        return x.representative < y.representative;
    });
    for (size_t i = 0; i < rows.size(); ++i)
        rows[i].rank = i + 1;
    return rows;
}

double top_share(std::span<const uint64_t> sizes_desc, double percent)
{
    if (sizes_desc.empty())
        return 0.0;
    const auto n = static_cast<double>(sizes_desc.size());
    auto k = static_cast<size_t>(std::ceil(percent * n / 100.0 - 1e-9));
    k = std::clamp<size_t>(k, 1, sizes_desc.size());
    const auto all = std::accumulate(sizes_desc.begin(), sizes_desc.end(), uint64_t{0});
    const auto top = std::accumulate(sizes_desc.begin(),
        sizes_desc.begin() + static_cast<ptrdiff_t>(k), uint64_t{0});
    return all == 0 ? 0.0 : 100.0 * static_cast<double>(top) / static_cast<double>(all);
}

pareto_summary pareto_report(std::vector<uint64_t> cluster_sizes)
{
    if (cluster_sizes.empty())
        throw error("pareto report needs at least one cluster");
    std::sort(cluster_sizes.begin(), cluster_sizes.end(), std::greater<>());

    pareto_summary out;
    out.cluster_count = cluster_sizes.size();
    out.contract_count = std::accumulate(cluster_sizes.begin(), cluster_sizes.end(), uint64_t{0});
    uint64_t running = 0;
    for (size_t i = 0; i < cluster_sizes.size(); ++i)
    {
        running += cluster_sizes[i];
        pareto_point pt;
        pt.rank = i + 1;
        pt.cluster_share = 100.0 * static_cast<double>(i + 1) / static_cast<double>(out.cluster_count);
        pt.cumulative_share = out.contract_count == 0
                                  ? 100.0
                                  : 100.0 * static_cast<double>(running) /
                                        static_cast<double>(out.contract_count);
        out.cdf.push_back(pt);
    }
    out.top1_share = top_share(cluster_sizes, 1.0);
    out.top20_share = top_share(cluster_sizes, 20.0);
    return out;
}

std::string format_top_share(double percent_of_clusters, double share)
{
    return fmt::format("top {}%: {:.1f}%", percent_of_clusters, share);
}
}  // namespace evmclone
