// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/dappmatch.hpp>
#include <evmclone/errors.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace evmclone
{
weight_matrix::weight_matrix(std::initializer_list<std::initializer_list<double>> rows)
  : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
    {
        if (r.size() != cols_)
            throw error("weight matrix rows must have equal length");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

match_result km_match(const weight_matrix& weights)
{
    if (weights.rows() == 0 || weights.cols() == 0)
        throw empty_matching("cannot match an empty weight matrix");

    // Minimum-cost assignment on cost = -weight over the zero-padded square
    // matrix, with row/column potentials. Indices are 1-based; 0 is a sentinel.
    const size_t n = std::max(weights.rows(), weights.cols());
    const auto cost = [&](size_t r, size_t c) {
        return (r < weights.rows() && c < weights.cols()) ? -weights(r, c) : 0.0;
    };
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<size_t> row_of(n + 1, 0);
    std::vector<size_t> way(n + 1, 0);

    for (size_t i = 1; i <= n; ++i)
    {
        row_of[0] = i;
        size_t col = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do
        {
            used[col] = 1;
            const size_t row = row_of[col];
            double delta = inf;
            size_t next = 0;
            for (size_t j = 1; j <= n; ++j)
            {
                if (used[j])
                    continue;
                const double reduced = cost(row - 1, j - 1) - u[row] - v[j];
                if (reduced < minv[j])
                {
                    minv[j] = reduced;
                    way[j] = col;
                }
                if (minv[j] < delta)
                {
                    delta = minv[j];
                    next = j;
                }
            }
            for (size_t j = 0; j <= n; ++j)
            {
                if (used[j])
                {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                }
                else
                    minv[j] -= delta;
            }
            col = next;
        } while (row_of[col] != 0);

        do
        {
            const size_t prev = way[col];
            row_of[col] = row_of[prev];
            col = prev;
        } while (col != 0);
    }

    match_result out;
    for (size_t j = 1; j <= n; ++j)
    {
        const size_t r = row_of[j] - 1;
        const size_t c = j - 1;
        if (r < weights.rows() && c < weights.cols())
            out.edges.push_back({r, c, weights(r, c)});
    }
    std::sort(out.edges.begin(), out.edges.end(),
        [](const matched_edge& x, const matched_edge& y) { return x.left < y.left; });
    for (const auto& e : out.edges)
        out.total_weight += e.weight;
    return out;
}

reduced_dapp exclude_templates(const dapp_manifest& d, const template_set& templates,
    const profile_lookup& profiles)
{
    reduced_dapp out;
    for (const auto& c : d.contracts)
    {
        const auto it = profiles.find(c);
        if (it == profiles.end())
            throw unknown_contract(
                fmt::format("DApp '{}' references unknown contract {}", d.name, c));
        if (!templates.contains(it->second.token_hash))
            out.contracts.push_back(c);
    }
    out.template_only = out.contracts.empty();
    return out;
}

weight_matrix contract_weights(const std::vector<std::string>& left,
    const std::vector<std::string>& right, const profile_lookup& profiles)
{
    const auto profile = [&](const std::string& id) -> const contract_profile& {
        const auto it = profiles.find(id);
        if (it == profiles.end())
            throw unknown_contract(fmt::format("unknown contract {}", id));
        return it->second;
    };

    weight_matrix w(left.size(), right.size());
    for (size_t r = 0; r < left.size(); ++r)
    {
        const auto& a = profile(left[r]);
        for (size_t c = 0; c < right.size(); ++c)
        {
            const auto& b = profile(right[c]);
            if (prune_filter(a.meta, b.meta))
                w(r, c) = similarity_score(a.fp, b.fp);
        }
    }
    return w;
}

double directional_similarity(const std::vector<std::string>& source,
    const std::vector<std::string>& target, const profile_lookup& profiles)
{
    if (source.empty() || target.empty())
        throw template_only("directional similarity needs contracts on both sides");
    const auto match = km_match(contract_weights(source, target, profiles));
    return match.total_weight / static_cast<double>(source.size());
}

double dapp_similarity(const dapp_manifest& d1, const dapp_manifest& d2,
    const profile_lookup& profiles, const template_set& templates)
{
    const auto r1 = exclude_templates(d1, templates, profiles);
    const auto r2 = exclude_templates(d2, templates, profiles);
    if (r1.template_only || r2.template_only)
        throw template_only(fmt::format("DApp '{}' consists only of template contracts",
            r1.template_only ? d1.name : d2.name));
    return std::max(directional_similarity(r1.contracts, r2.contracts, profiles),
        directional_similarity(r2.contracts, r1.contracts, profiles));
}

bool share_deployer(const dapp_manifest& d1, const dapp_manifest& d2)
{
    for (const auto& x : d1.deployers)
    {
        if (std::find(d2.deployers.begin(), d2.deployers.end(), x) != d2.deployers.end())
            return true;
    }
    return false;
}

bool dapp_deployed_before(const dapp_manifest& a, const dapp_manifest& b) noexcept
{
    return std::tie(a.deployed_at, a.name) < std::tie(b.deployed_at, b.name);
}

clone_detection detect_clones(const std::vector<dapp_manifest>& dapps,
    const profile_lookup& profiles, const template_set& templates, double threshold)
{
    validate_threshold(threshold);

    // Canonical order makes the result independent of input order.
    std::vector<const dapp_manifest*> order;
    for (const auto& d : dapps)
        order.push_back(&d);
    std::sort(order.begin(), order.end(),
        [](const dapp_manifest* x, const dapp_manifest* y) { return x->name < y->name; });

    clone_detection out;
    std::vector<reduced_dapp> reduced;
    for (const auto* d : order)
    {
        reduced.push_back(exclude_templates(*d, templates, profiles));
        if (reduced.back().template_only)
            out.template_only.push_back(d->name);
    }

    std::vector<similarity_pair> edges;
    for (size_t i = 0; i < order.size(); ++i)
    {
        for (size_t j = i + 1; j < order.size(); ++j)
        {
            const auto& x = *order[i];
            const auto& y = *order[j];
            if (reduced[i].template_only || reduced[j].template_only || share_deployer(x, y))
                continue;
            const double score = std::max(
                directional_similarity(reduced[i].contracts, reduced[j].contracts, profiles),
                directional_similarity(reduced[j].contracts, reduced[i].contracts, profiles));
            if (score < threshold)
                continue;
            const bool x_first = dapp_deployed_before(x, y);
            out.pairs.push_back({x_first ? x.name : y.name, x_first ? y.name : x.name, score});
            edges.push_back(make_pair(x.name, y.name, score));
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
        [](const dapp_clone_pair& l, const dapp_clone_pair& r) {
            return std::tie(l.original, l.clone) < std::tie(r.original, r.clone);
        });

    std::map<std::string, const dapp_manifest*> by_name;
    for (const auto* d : order)
        by_name[d->name] = d;

    for (const auto& component : connected_components(build_graph(edges, 0.0)).clusters)
    {
        std::vector<const dapp_manifest*> members;
        for (const auto& name : component.members)
            members.push_back(by_name.at(name));
        std::sort(members.begin(), members.end(),
            [](const dapp_manifest* x, const dapp_manifest* y) {
                return dapp_deployed_before(*x, *y);
            });
        dapp_clone_cluster c;
        c.original = members.front()->name;
        for (size_t k = 1; k < members.size(); ++k)
            c.clones.push_back(members[k]->name);
        out.clusters.push_back(std::move(c));
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
        [](const dapp_clone_cluster& x, const dapp_clone_cluster& y) {
            if (x.clones.size() != y.clones.size())
                return x.clones.size() > y.clones.size();
            return x.original < y.original;
        });
    return out;
}

volume_report volume_impact(const std::vector<dapp_clone_cluster>& clusters,
    const std::vector<dapp_manifest>& dapps)
{
    std::map<std::string, double> volume_of;
    for (const auto& d : dapps)
        volume_of[d.name] = d.volume;
    const auto volume = [&](const std::string& name) {
        const auto it = volume_of.find(name);
        if (it == volume_of.end())
            throw unknown_contract(fmt::format("no manifest for DApp '{}'", name));
        return it->second;
    };
    const auto ratio = [](double plagiarized, double original) -> std::optional<double> {
        if (original == 0.0)
            return std::nullopt;
        return plagiarized / original;
    };

    volume_report report;
    report.totals.original = "total";
    for (const auto& c : clusters)
    {
        volume_row row;
        row.original = c.original;
        row.clone_count = c.clones.size();
        row.original_volume = volume(c.original);
        for (const auto& clone : c.clones)
            row.plagiarized_volume += volume(clone);
        row.ratio = ratio(row.plagiarized_volume, row.original_volume);
        report.totals.clone_count += row.clone_count;
        report.totals.original_volume += row.original_volume;
        report.totals.plagiarized_volume += row.plagiarized_volume;
        report.rows.push_back(std::move(row));
    }
    report.totals.ratio = ratio(report.totals.plagiarized_volume, report.totals.original_volume);
    std::stable_sort(report.rows.begin(), report.rows.end(),
        [](const volume_row& x, const volume_row& y) {
            if (x.clone_count != y.clone_count)
                return x.clone_count > y.clone_count;
            return x.original < y.original;
        });
    return report;
}

std::string format_ratio(const std::optional<double>& ratio)
{
    if (!ratio)
        return "n/a";
    const double percent = *ratio * 100.0;
    if (percent > 0.0 && percent < 0.005)
        return "<0.01%";
    return fmt::format("{:.2f}%", percent);
}

std::string format_volume(double volume)
{
    auto text = fmt::format("{:.3f}", volume);
    const auto dot = text.find('.');
    const size_t digits_begin = text[0] == '-' ? 1 : 0;
    for (auto pos = static_cast<ptrdiff_t>(dot) - 3; pos > static_cast<ptrdiff_t>(digits_begin);
         pos -= 3)
        text.insert(static_cast<size_t>(pos), 1, ',');
    return text;
}
}  // namespace evmclone
