// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/bytes.hpp>
#include <evmclone/opcodes.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
struct instruction
{
    size_t offset = 0;
    uint8_t opcode = 0;
    /// Exactly immediate_size(opcode) bytes. A PUSH cut off by the end of the
    /// code is zero-padded on the right and marked truncated.
    bytes immediate;
    bool truncated = false;

    const opcode_info& info() const noexcept { return lookup(opcode); }
    size_t size() const noexcept { return 1 + immediate.size(); }
};

/// Linear-sweep disassembly. Every byte is consumed exactly once; undefined
/// byte values become single-byte INVALID instructions.
/// Throws empty_bytecode on empty input.
std::vector<instruction> decode(bytes_view code);

/// Inverse of decode for untruncated streams. Truncated immediates are
/// emitted with their padding.
bytes encode(const std::vector<instruction>& instrs);

/// One line per instruction: "<offset hex>: MNEMONIC [0ximmediate]".
std::string disassemble(bytes_view code);

/// Compiler metadata trailer "a1 65 'bzzr0' 58 ... 00 29" at the end of code.
struct swarm_tail
{
    size_t offset = 0;  ///< position of the a1 marker byte
    size_t length = 0;  ///< bytes from the marker through the final 0x29
    /// False when the bytes between the a165 marker and 0029 are not 41 long.
    bool standard_length = true;
};

inline constexpr uint8_t swarm_prefix[] = {0xa1, 0x65, 0x62, 0x7a, 0x7a, 0x72, 0x30, 0x58};
inline constexpr uint8_t swarm_suffix[] = {0x00, 0x29};
inline constexpr size_t swarm_standard_inner_length = 41;

std::optional<swarm_tail> find_swarm_tail(bytes_view code) noexcept;

/// Removes the Swarm trailer if present, otherwise returns the input unchanged.
bytes strip_swarm(bytes_view code);

struct split_code
{
    bytes creation;  ///< empty when no boundary was found
    bytes runtime;
    bool found = false;
};

/// Splits at the first PUSH1 0x00, RETURN, STOP sequence lying on decoded
/// instruction boundaries. Bytes inside PUSH data never match.
split_code split_creation(bytes_view full);

enum class input_kind
{
    auto_detect,  ///< split when a creation boundary exists
    runtime,      ///< input is runtime code already
    creation,     ///< input must contain a creation boundary
};

input_kind parse_input_kind(std::string_view name);
std::string_view to_string(input_kind kind) noexcept;

/// Returns true for the opcodes that terminate a fingerprint piece by default:
/// JUMP, JUMPI, REVERT, STOP, RETURN.
constexpr bool is_default_trigger(uint8_t op) noexcept
{
    return op == OP_JUMP || op == OP_JUMPI || op == OP_REVERT || op == OP_STOP || op == OP_RETURN;
}

struct tokenized_code
{
    bytes opcode_bytes;  ///< one byte per instruction, immediates removed
    size_t opcode_count = 0;
    size_t block_count = 0;       ///< pieces under the default trigger set
    size_t runtime_byte_len = 0;  ///< runtime length after Swarm removal
    digest256 runtime_hash;
    digest256 token_hash;
    bool truncated_push = false;
};

/// Throws empty_bytecode on empty runtime.
tokenized_code tokenize(bytes_view runtime);

/// Full pre-processing of raw on-chain bytes: creation split (per kind), Swarm
/// removal, tokenization. Throws split_not_found for kind == creation without
/// a boundary and empty_bytecode when nothing remains.
tokenized_code preprocess(bytes_view raw, input_kind kind = input_kind::auto_detect);

/// Runtime code after creation split and Swarm removal. Throws empty_bytecode
/// when nothing remains.
bytes extract_runtime(bytes_view raw, input_kind kind = input_kind::auto_detect);

enum class creation_kind
{
    user_created,
    contract_created,
};

std::string_view to_string(creation_kind kind) noexcept;
creation_kind parse_creation_kind(std::string_view name);

struct contract_record
{
    std::string id;  ///< lowercase 0x-prefixed address
    std::string deployer;
    creation_kind kind = creation_kind::user_created;
    bytes raw_bytecode;
    std::optional<int64_t> deployed_at;  ///< unix seconds
};

/// Representative ordering: earliest deployment first (undated records last),
/// ties by address.
bool deployed_before(const contract_record& a, const contract_record& b) noexcept;

struct duplicate_group
{
    digest256 token_hash;
    std::string representative;
    std::vector<std::string> members;  ///< sorted, includes the representative
};

struct distinct_contract
{
    contract_record representative;
    tokenized_code code;
};

struct dedup_result
{
    /// Sorted by representative id; groups[i] belongs to distinct[i].
    std::vector<distinct_contract> distinct;
    std::vector<duplicate_group> groups;
    size_t distinct_runtime_count = 0;  ///< unique runtime_hash values
};

dedup_result dedup(const std::vector<contract_record>& corpus,
    input_kind kind = input_kind::auto_detect);
}  // namespace evmclone
