// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/cluster.hpp>
#include <evmclone/errors.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace evmclone
{
similarity_graph build_graph(std::span<const similarity_pair> pairs, double threshold,
    std::span<const std::string> nodes)
{
    validate_threshold(threshold);

    similarity_graph g;
    g.nodes.assign(nodes.begin(), nodes.end());
    std::map<std::pair<std::string, std::string>, double> edges;
    for (const auto& p : pairs)
    {
        g.nodes.push_back(p.a);
        g.nodes.push_back(p.b);
        if (p.a == p.b || p.score < threshold)
            continue;
        auto key = p.a < p.b ? std::pair{p.a, p.b} : std::pair{p.b, p.a};
        auto [it, inserted] = edges.try_emplace(std::move(key), p.score);
        if (!inserted)
            it->second = std::max(it->second, p.score);
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());

    g.edges.reserve(edges.size());
    for (auto& [key, weight] : edges)
        g.edges.push_back({key.first, key.second, weight});
    return g;
}

disjoint_set::disjoint_set(size_t n) : parent_(n), size_(n, 1)
{
    std::iota(parent_.begin(), parent_.end(), size_t{0});
}

size_t disjoint_set::find(size_t x) noexcept
{
    size_t root = x;
    while (parent_[root] != root)
        root = parent_[root];
    while (parent_[x] != root)
        x = std::exchange(parent_[x], root);
    return root;
}

bool disjoint_set::unite(size_t x, size_t y) noexcept
{
    x = find(x);
    y = find(y);
    if (x == y)
        return false;
    if (size_[x] < size_[y])
        std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
}

clustering connected_components(const similarity_graph& g)
{
    std::unordered_map<std::string_view, size_t> index;
    index.reserve(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i)
        index.emplace(g.nodes[i], i);

    disjoint_set sets(g.nodes.size());
    for (const auto& e : g.edges)
    {
        const auto a = index.find(e.a);
        const auto b = index.find(e.b);
        if (a == index.end() || b == index.end())
            throw error(fmt::format("edge {}-{} references an unknown node", e.a, e.b));
        sets.unite(a->second, b->second);
    }

    // Nodes are sorted, so members come out sorted too.
    std::unordered_map<size_t, size_t> slot_of_root;
    std::vector<contract_cluster> components;
    clustering out;
    for (size_t i = 0; i < g.nodes.size(); ++i)
    {
        const size_t root = sets.find(i);
        if (sets.size_of(root) == 1)
        {
            out.singletons.push_back(g.nodes[i]);
            continue;
        }
        const auto [it, inserted] = slot_of_root.try_emplace(root, components.size());
        if (inserted)
            components.emplace_back();
        components[it->second].members.push_back(g.nodes[i]);
    }

    std::sort(components.begin(), components.end(),
        [](const contract_cluster& x, const contract_cluster& y) {
            if (x.members.size() != y.members.size())
                return x.members.size() > y.members.size();
            return x.members.front() < y.members.front();
        });
    for (auto& c : components)
        c.total_population = c.members.size();
    out.clusters = std::move(components);
    return out;
}

std::map<std::string, size_t> group_sizes(const std::vector<duplicate_group>& groups)
{
    std::map<std::string, size_t> sizes;
    for (const auto& g : groups)
        sizes[g.representative] = g.members.size();
    return sizes;
}

std::vector<contract_cluster> expand_with_duplicates(std::vector<contract_cluster> clusters,
    const std::map<std::string, size_t>& sizes)
{
    for (auto& c : clusters)
    {
        c.total_population = 0;
        for (const auto& m : c.members)
        {
            const auto it = sizes.find(m);
            if (it == sizes.end())
                throw unknown_representative(
                    fmt::format("cluster member {} is not a duplicate-group representative", m));
            c.total_population += it->second;
        }
    }
    return clusters;
}

void sort_by_population(std::vector<contract_cluster>& clusters)
{
    std::stable_sort(clusters.begin(), clusters.end(),
        [](const contract_cluster& x, const contract_cluster& y) {
            return std::tuple{y.total_population, y.members.size(), x.members.front()} <
                   std::tuple{x.total_population, x.members.size(), y.members.front()};
        });
}

void apply_labels(std::vector<contract_cluster>& clusters,
    const std::map<std::string, std::string>& member_labels)
{
    for (auto& c : clusters)
    {
        for (const auto& m : c.members)
        {
            if (const auto it = member_labels.find(m); it != member_labels.end())
            {
                c.label = it->second;
                break;
            }
        }
    }
}

std::string format_cluster_size(const contract_cluster& c)
{
    return fmt::format("{} ({})", c.members.size(), c.total_population);
}
}  // namespace evmclone
