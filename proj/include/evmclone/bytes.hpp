// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
using bytes = std::vector<uint8_t>;
using bytes_view = std::span<const uint8_t>;

/// Lowercase hex without prefix.
std::string to_hex(bytes_view data);

/// Parses hex with an optional 0x prefix. Either case is accepted.
/// Throws invalid_hex on odd length or a non-hex character.
bytes from_hex(std::string_view hex);

/// 256-bit digest (SHA-256).
struct digest256
{
    std::array<uint8_t, 32> value{};

    std::string hex() const { return to_hex(value); }
    static digest256 from_hex(std::string_view hex);

    friend auto operator<=>(const digest256&, const digest256&) = default;
};

digest256 sha256(bytes_view data);

struct digest256_hash
{
    size_t operator()(const digest256& d) const noexcept
    {
        size_t h = 0;
        for (size_t i = 0; i < sizeof(size_t); ++i)
            h = (h << 8) | d.value[i];
        return h;
    }
};
}  // namespace evmclone
