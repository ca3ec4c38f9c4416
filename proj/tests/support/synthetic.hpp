// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Synthetic contract corpora with ground truth known by construction.

#include <evmclone/evm_core.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace evmclone::testkit
{
/// One basic piece: body opcodes followed by a trigger. PUSH immediates are
/// drawn fresh whenever the piece is emitted.
struct piece_template
{
    std::vector<uint8_t> ops;
};

struct contract_template
{
    std::vector<piece_template> pieces;
};

contract_template random_template(std::mt19937_64& rng, size_t piece_count);

/// Copy of `t` with `mutated_pieces` distinct pieces altered by one body opcode.
contract_template mutate(const contract_template& t, size_t mutated_pieces, std::mt19937_64& rng);

/// Runtime bytes with random push immediates.
bytes emit_runtime(const contract_template& t, std::mt19937_64& rng);

/// Creation stub ending in PUSH1 0x00 RETURN STOP, with random immediates.
bytes random_creation_stub(std::mt19937_64& rng);

/// Standard 43-byte Swarm trailer with a random hash.
bytes random_swarm_tail(std::mt19937_64& rng);

std::string random_address(std::mt19937_64& rng);

struct corpus_options
{
    size_t templates = 5;
    size_t copies_per_template = 20;
    size_t pieces_per_template = 40;
    /// Mutated pieces per copy stay strictly below this fraction of pieces.
    double max_mutated_fraction = 0.10;
    /// Every n-th copy is left unmutated so it duplicates its template.
    size_t duplicate_every = 4;
    uint64_t seed = 42;
};

struct synthetic_corpus
{
    std::vector<contract_record> records;
    std::vector<size_t> template_of;  ///< parallel to records
};

/// Full deployment bytecode (creation stub + runtime + Swarm trailer) per copy.
synthetic_corpus make_corpus(const corpus_options& opts);
}  // namespace evmclone::testkit
