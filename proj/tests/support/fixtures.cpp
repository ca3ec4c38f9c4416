// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <fmt/format.h>

namespace evmclone::testkit
{
namespace
{
vuln_profile findings(std::string id, std::initializer_list<std::pair<vuln_type, uint32_t>> counts)
{
    vuln_profile p{std::move(id), {}};
    for (const auto& [type, n] : counts)
        p.counts[static_cast<size_t>(type)] = n;
    return p;
}

std::pair<vuln_profile, vuln_profile> profiles_for(
    behavior b, const std::string& x, const std::string& y)
{
    using enum vuln_type;
    switch (b)
    {
    case behavior::neither_vulnerable:
        return {findings(x, {}), findings(y, {})};
    case behavior::both_same_behavior:
        return {findings(x, {{overflow, 1}, {erc20, 2}}), findings(y, {{overflow, 1}, {erc20, 2}})};
    case behavior::one_vulnerable:
        return {findings(x, {{reentrancy, 1}}), findings(y, {})};
    case behavior::both_overlapped:
        return {findings(x, {{overflow, 1}}), findings(y, {{overflow, 2}})};
    case behavior::both_not_overlapped:
        return {findings(x, {{reentrancy, 1}}), findings(y, {{overflow, 1}})};
    }
    return {};
}
}  // namespace

provenance_fixture make_provenance_fixture(
    const std::array<std::array<uint64_t, behavior_count>, 2>& cells)
{
    provenance_fixture f;
    uint64_t serial = 0;
    const auto address = [&serial] { return fmt::format("0x{:040x}", ++serial); };
    for (size_t r = 0; r < 2; ++r)
    {
        for (size_t k = 0; k < behavior_count; ++k)
        {
            for (uint64_t n = 0; n < cells[r][k]; ++n)
            {
                const auto x = address();
                const auto y = address();
                auto [px, py] = profiles_for(static_cast<behavior>(k), x, y);
                f.profiles[x] = std::move(px);
                f.profiles[y] = std::move(py);
                const auto deployer = address();
                f.authors[x] = deployer;
                f.authors[y] = r == 0 ? deployer : address();
                f.pairs.push_back(make_pair(x, y, 80.0));
            }
        }
    }
    return f;
}

const std::vector<volume_fixture_row>& reference_volume_rows()
{
    static const std::vector<volume_fixture_row> rows = {
        {"CryptoCountries", 4, 67885.244, 2.355, "<0.01%"},
        {"PoWTF", 4, 331.074, 1012.649, "305.87%"},
        {"Po50", 4, 76.801, 213.058, "277.42%"},
        {"Pepe Farm", 4, 25.428, 33.577, "132.05%"},
        {"Crypto Miner", 4, 17312.026, 155.437, "0.90%"},
        {"PoWH 3D", 4, 187950.872, 1778.146, "9.38%"},
        {"CryptoTubers", 3, 95.378, 470.967, "493.79%"},
        {"PoHD", 3, 242.607, 5867.961, "2418.71%"},
        {"Proof Of Craig Grant Coin", 3, 642.056, 94.315, "14.69%"},
        {"Crypto Gaming Coin", 3, 4.711, 555.142, "11783.95%"},
    };
    return rows;
}

volume_fixture make_volume_fixture(const std::vector<volume_fixture_row>& rows)
{
    volume_fixture f;
    int64_t at = 1;
    for (const auto& row : rows)
    {
        f.dapps.push_back({row.original, {}, {}, row.original_volume, at++, {}});
        dapp_clone_cluster cluster{row.original, {}};
        // The first clone carries the whole plagiarized volume.
        for (size_t c = 0; c < row.clones; ++c)
        {
            auto name = fmt::format("{} clone {}", row.original, c + 1);
            f.dapps.push_back({name, {}, {}, c == 0 ? row.plagiarized_volume : 0.0, at++, {}});
            cluster.clones.push_back(std::move(name));
        }
        f.clusters.push_back(std::move(cluster));
    }
    return f;
}
}  // namespace evmclone::testkit
