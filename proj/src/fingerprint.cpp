// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/errors.hpp>
#include <evmclone/fingerprint.hpp>

namespace evmclone
{
trigger_set::trigger_set() : trigger_set{OP_JUMP, OP_JUMPI, OP_REVERT, OP_STOP, OP_RETURN} {}

trigger_set::trigger_set(std::initializer_list<uint8_t> ops)
{
    for (const auto op : ops)
        bits_.set(op);
}

std::vector<bytes_view> cut_pieces(bytes_view opcode_bytes, const trigger_set& triggers)
{
    std::vector<bytes_view> pieces;
    size_t begin = 0;
    for (size_t i = 0; i < opcode_bytes.size(); ++i)
    {
        if (triggers.contains(opcode_bytes[i]))
        {
            pieces.push_back(opcode_bytes.subspan(begin, i + 1 - begin));
            begin = i + 1;
        }
    }
    if (begin < opcode_bytes.size())
        pieces.push_back(opcode_bytes.subspan(begin));
    return pieces;
}

uint32_t piece_hash(bytes_view piece) noexcept
{
    uint32_t h = 2166136261u;
    for (const auto b : piece)
    {
        h ^= b;
        h *= 16777619u;
    }
    return h;
}

fingerprint generate_fp(bytes_view opcode_bytes, const trigger_set& triggers)
{
    std::string chars;
    for (const auto piece : cut_pieces(opcode_bytes, triggers))
        chars.push_back(piece_char(piece));
    return fingerprint{std::move(chars)};
}

fingerprint generate_fp(const tokenized_code& code)
{
    if (code.opcode_bytes.empty())
        throw empty_bytecode("cannot fingerprint empty tokenized code");
    return generate_fp(code.opcode_bytes);
}
}  // namespace evmclone
