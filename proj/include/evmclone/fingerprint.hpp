// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/evm_core.hpp>

#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
/// Bumped whenever the piece hash or the character alphabet changes; persisted
/// fingerprints from another version are not comparable.
inline constexpr int fingerprint_format_version = 1;
inline constexpr std::string_view fingerprint_scheme = "fnv1a32-mod64-b64std";

inline constexpr std::string_view b64_alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

/// Opcodes that close a piece.
class trigger_set
{
public:
    /// JUMP, JUMPI, REVERT, STOP, RETURN.
    trigger_set();
    trigger_set(std::initializer_list<uint8_t> ops);

    bool contains(uint8_t op) const noexcept { return bits_[op]; }
    size_t size() const noexcept { return bits_.count(); }

private:
    std::bitset<256> bits_;
};

/// Customized fuzzy hash: one base-64 character per piece.
class fingerprint
{
public:
    fingerprint() = default;
    explicit fingerprint(std::string chars) : chars_(std::move(chars)) {}

    const std::string& chars() const noexcept { return chars_; }
    size_t piece_count() const noexcept { return chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }

    friend auto operator<=>(const fingerprint&, const fingerprint&) = default;

private:
    std::string chars_;
};

/// Splits tokenized opcode bytes after every trigger opcode. A residue after
/// the last trigger forms a final piece. Views point into `opcode_bytes`.
std::vector<bytes_view> cut_pieces(bytes_view opcode_bytes, const trigger_set& triggers = {});

/// 32-bit FNV-1a.
uint32_t piece_hash(bytes_view piece) noexcept;

inline char piece_char(bytes_view piece) noexcept
{
    return b64_alphabet[piece_hash(piece) % 64];
}

fingerprint generate_fp(bytes_view opcode_bytes, const trigger_set& triggers = {});

/// Throws empty_bytecode for empty tokenized code.
fingerprint generate_fp(const tokenized_code& code);
}  // namespace evmclone
