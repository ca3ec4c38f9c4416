// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace evmclone
{
enum opcode : uint8_t
{
    OP_STOP = 0x00,
    OP_ADD = 0x01,
    OP_MUL = 0x02,
    OP_SUB = 0x03,
    OP_DIV = 0x04,
    OP_LT = 0x10,
    OP_GT = 0x11,
    OP_EQ = 0x14,
    OP_ISZERO = 0x15,
    OP_AND = 0x16,
    OP_SHA3 = 0x20,
    OP_CALLER = 0x33,
    OP_CALLVALUE = 0x34,
    OP_CALLDATALOAD = 0x35,
    OP_CALLDATASIZE = 0x36,
    OP_CODECOPY = 0x39,
    OP_POP = 0x50,
    OP_MLOAD = 0x51,
    OP_MSTORE = 0x52,
    OP_SLOAD = 0x54,
    OP_SSTORE = 0x55,
    OP_JUMP = 0x56,
    OP_JUMPI = 0x57,
    OP_JUMPDEST = 0x5b,
    OP_PUSH0 = 0x5f,
    OP_PUSH1 = 0x60,
    OP_PUSH2 = 0x61,
    OP_PUSH4 = 0x63,
    OP_PUSH32 = 0x7f,
    OP_DUP1 = 0x80,
    OP_DUP2 = 0x81,
    OP_DUP3 = 0x82,
    OP_SWAP1 = 0x90,
    OP_SWAP2 = 0x91,
    OP_LOG1 = 0xa1,
    OP_RETURN = 0xf3,
    OP_REVERT = 0xfd,
    OP_INVALID = 0xfe,
    OP_SELFDESTRUCT = 0xff,
};

struct opcode_info
{
    std::string_view mnemonic;  ///< "INVALID" for undefined byte values
    uint8_t value = 0;
    uint8_t immediate_len = 0;  ///< 1..32 for PUSH1..PUSH32, otherwise 0
    bool defined = false;
};

/// Full 256-entry table indexed by byte value.
const std::array<opcode_info, 256>& opcode_table() noexcept;

inline const opcode_info& lookup(uint8_t byte) noexcept
{
    return opcode_table()[byte];
}

constexpr uint8_t immediate_size(uint8_t byte) noexcept
{
    return (byte >= OP_PUSH1 && byte <= OP_PUSH32) ? static_cast<uint8_t>(byte - OP_PUSH1 + 1) : 0;
}
}  // namespace evmclone
