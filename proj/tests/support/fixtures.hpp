// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Report fixtures shared by the unit and acceptance suites.

#include <evmclone/analytics.hpp>
#include <evmclone/dappmatch.hpp>

#include <array>
#include <string>
#include <vector>

namespace evmclone::testkit
{
/// Pair counts per [author_relation][behavior], 1000x smaller than a
/// 472,663-pair population with totals 206,671 / 46,181 / 149,514 / 60,016 / 10,281.
inline constexpr std::array<std::array<uint64_t, behavior_count>, 2> scaled_provenance_cells = {{
    {27, 4, 6, 2, 0},
    {180, 42, 144, 58, 10},
}};

// Produced by tests/oracles/fingerprint_oracle.py (independent decoder, FNV-1a
// and alphabet). The variant omits the overflow check in its add helper.
inline constexpr auto hello_original =
    "608060405260043610610041576000357c0100000000000000000000000000000000000000000000000000000000"
    "900463ffffffff1680633ccfd60b146100465780636d4ce63c1461005d578063771602f714610088575b600080fd"
    "5b34801561005257600080fd5b5061005b610090565b6040518082815260200191505060405180910390f35b3480"
    "1561005257600080fd5b5061005b6100a0565b6040518082815260200191505060405180910390f35b3480156100"
    "5257600080fd5b5061005b6100b0565b6040518082815260200191505060405180910390f35b6000828401905083"
    "81101515156100c757600080fd5b8091505092915050565b33600055565b60005490565b60016000540160005500"
    "5b600080543314156100f0575b60015491505056";
inline constexpr auto hello_variant =
    "608060405260043610610041576000357c0100000000000000000000000000000000000000000000000000000000"
    "900463ffffffff1680633ccfd60b146100465780636d4ce63c1461005d578063771602f714610088575b600080fd"
    "5b34801561005257600080fd5b5061005b610090565b6040518082815260200191505060405180910390f35b3480"
    "1561005257600080fd5b5061005b6100a0565b6040518082815260200191505060405180910390f35b3480156100"
    "5257600080fd5b5061005b6100b0565b6040518082815260200191505060405180910390f35b6000828401905080"
    "91505092915050565b33600055565b60005490565b600160005401600055005b600080543314156100f0575b6001"
    "5491505056";
inline constexpr auto hello_original_fp = "tSMM1lw2Klw2Klw2KSweuE2U5";
inline constexpr auto hello_variant_fp = "tSMM1lw2Klw2Klw2KhuE2U5";

struct provenance_fixture
{
    std::vector<similarity_pair> pairs;
    profile_map profiles;
    author_map authors;
};

/// Synthetic pairs whose profiles and deployers land each pair in the
/// requested cell.
provenance_fixture make_provenance_fixture(
    const std::array<std::array<uint64_t, behavior_count>, 2>& cells);

struct volume_fixture_row
{
    std::string original;
    size_t clones = 0;
    double original_volume = 0.0;
    double plagiarized_volume = 0.0;
    std::string printed_ratio;  ///< as printed alongside the volumes
};

/// Ten DApp clone families with reference volumes and printed ratios.
const std::vector<volume_fixture_row>& reference_volume_rows();

struct volume_fixture
{
    std::vector<dapp_manifest> dapps;
    std::vector<dapp_clone_cluster> clusters;
};

/// Manifests and clusters whose clone volumes sum to each row's plagiarized
/// volume.
volume_fixture make_volume_fixture(const std::vector<volume_fixture_row>& rows);
}  // namespace evmclone::testkit
