// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include "../support/synthetic.hpp"

#include <evmclone/errors.hpp>
#include <evmclone/evm_core.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace evmclone;

namespace
{
bytes concat(std::initializer_list<bytes> parts)
{
    bytes out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

const bytes swarm_a = from_hex(
    "a165627a7a72305820" "1111111111111111111111111111111111111111111111111111111111111111" "0029");
const bytes swarm_b = from_hex(
    "a165627a7a72305820" "2222222222222222222222222222222222222222222222222222222222222222" "0029");
}  // namespace

TEST(opcodes, table_is_consistent)
{
    const auto& table = opcode_table();
    for (size_t i = 0; i < table.size(); ++i)
    {
        EXPECT_EQ(table[i].value, i);
        EXPECT_LE(table[i].immediate_len, 32);
    }
    for (int n = 1; n <= 32; ++n)
    {
        const auto& push = lookup(static_cast<uint8_t>(0x5f + n));
        EXPECT_EQ(push.immediate_len, n);
        EXPECT_EQ(push.mnemonic, "PUSH" + std::to_string(n));
    }
    EXPECT_EQ(lookup(0xa0).mnemonic, "LOG0");
    EXPECT_EQ(lookup(0xa4).mnemonic, "LOG4");
    EXPECT_EQ(lookup(0x5f).immediate_len, 0);
    EXPECT_FALSE(lookup(0x0c).defined);
    EXPECT_EQ(lookup(0x0c).mnemonic, "INVALID");
}

TEST(decode, push_push_add)
{
    const auto instrs = decode(from_hex("0x6001600101"));
    ASSERT_EQ(instrs.size(), 3u);
    EXPECT_EQ(instrs[0].opcode, OP_PUSH1);
    EXPECT_EQ(instrs[0].immediate, bytes{0x01});
    EXPECT_EQ(instrs[1].offset, 2u);
    EXPECT_EQ(instrs[1].opcode, OP_PUSH1);
    EXPECT_EQ(instrs[2].opcode, OP_ADD);
    EXPECT_EQ(instrs[2].offset, 4u);
    EXPECT_TRUE(instrs[2].immediate.empty());
}

TEST(decode, single_stop)
{
    const auto instrs = decode(from_hex("00"));
    ASSERT_EQ(instrs.size(), 1u);
    EXPECT_EQ(instrs[0].info().mnemonic, "STOP");
}

TEST(decode, truncated_push_is_padded_and_flagged)
{
    const auto instrs = decode(from_hex("61ff"));
    ASSERT_EQ(instrs.size(), 1u);
    EXPECT_EQ(instrs[0].opcode, OP_PUSH2);
    EXPECT_EQ(instrs[0].immediate, (bytes{0xff, 0x00}));
    EXPECT_TRUE(instrs[0].truncated);
}

TEST(decode, unknown_bytes_are_single_invalid_instructions)
{
    const auto instrs = decode(from_hex("0c0d60aa"));
    ASSERT_EQ(instrs.size(), 3u);
    EXPECT_FALSE(instrs[0].info().defined);
    EXPECT_EQ(instrs[0].opcode, 0x0c);
    EXPECT_EQ(instrs[1].opcode, 0x0d);
    EXPECT_EQ(instrs[2].offset, 2u);
}

TEST(decode, empty_input_throws)
{
    EXPECT_THROW(decode({}), empty_bytecode);
}

TEST(decode, round_trip_and_offsets_on_random_code)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 300; ++trial)
    {
        bytes code(1 + static_cast<size_t>(trial % 200));
        for (auto& b : code)
            b = static_cast<uint8_t>(byte(rng));
        const auto instrs = decode(code);

        size_t expected_offset = 0;
        bool truncated = false;
        for (const auto& ins : instrs)
        {
            EXPECT_EQ(ins.offset, expected_offset);
            expected_offset += ins.size();
            truncated = truncated || ins.truncated;
        }
        const auto reencoded = encode(instrs);
        if (!truncated)
            EXPECT_EQ(reencoded, code);
        else
            EXPECT_TRUE(std::equal(code.begin(), code.end(), reencoded.begin()));
    }
}

TEST(disassemble, listing)
{
    EXPECT_EQ(disassemble(from_hex("6001600101")), "0000: PUSH1 0x01\n0002: PUSH1 0x01\n0004: ADD\n");
    EXPECT_EQ(disassemble(from_hex("61ff")), "0000: PUSH2 0xff00 (truncated)\n");
    EXPECT_EQ(disassemble(from_hex("0c")), "0000: INVALID (0x0c)\n");
}

TEST(strip_swarm, removes_standard_trailer)
{
    const auto runtime = from_hex("6001600101");
    const auto code = concat({runtime, swarm_a});
    const auto tail = find_swarm_tail(code);
    ASSERT_TRUE(tail.has_value());
    EXPECT_EQ(tail->offset, runtime.size());
    EXPECT_EQ(tail->length, 43u);
    EXPECT_TRUE(tail->standard_length);
    EXPECT_EQ(strip_swarm(code), runtime);
}

TEST(strip_swarm, absent_marker_leaves_input)
{
    const auto runtime = from_hex("6001600101");
    EXPECT_EQ(strip_swarm(runtime), runtime);
    // Marker without the 0029 terminator at the end is not a trailer.
    const auto no_terminator = concat({runtime, from_hex("a165627a7a723058ff")});
    EXPECT_EQ(strip_swarm(no_terminator), no_terminator);
    EXPECT_TRUE(strip_swarm(bytes{}).empty());
}

TEST(strip_swarm, only_hash_differs)
{
    const auto runtime = from_hex("60806040526004361061004c57");
    EXPECT_EQ(strip_swarm(concat({runtime, swarm_a})), strip_swarm(concat({runtime, swarm_b})));
}

TEST(strip_swarm, nonstandard_length_is_flagged_not_rejected)
{
    const auto runtime = from_hex("600100");
    const auto short_tail = from_hex("a165627a7a723058" "20aabbccdd" "0029");
    const auto code = concat({runtime, short_tail});
    const auto tail = find_swarm_tail(code);
    ASSERT_TRUE(tail.has_value());
    EXPECT_FALSE(tail->standard_length);
    EXPECT_EQ(strip_swarm(code), runtime);
}

TEST(strip_swarm, idempotent)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i)
    {
        auto code = testkit::emit_runtime(testkit::random_template(rng, 5), rng);
        if (i % 2 == 0)
        {
            const auto tail = testkit::random_swarm_tail(rng);
            code.insert(code.end(), tail.begin(), tail.end());
        }
        const auto once = strip_swarm(code);
        EXPECT_EQ(strip_swarm(once), once);
    }
}

TEST(split_creation, stub_then_runtime)
{
    const auto stub = from_hex("608060405234801561001057600080fd5b5061011d806100206000396000f300");
    const auto runtime = from_hex("6080604052600436106049576000357c01");
    const auto split = split_creation(concat({stub, runtime}));
    EXPECT_TRUE(split.found);
    EXPECT_EQ(split.creation, stub);
    EXPECT_EQ(split.runtime, runtime);
}

TEST(split_creation, runtime_only)
{
    const auto runtime = from_hex("6080604052600436106049576000357c01");
    const auto split = split_creation(runtime);
    EXPECT_FALSE(split.found);
    EXPECT_TRUE(split.creation.empty());
    EXPECT_EQ(split.runtime, runtime);
}

TEST(split_creation, pattern_inside_push_data_is_ignored)
{
    // PUSH4 0x6000f300 then ADD: the bytes 60 00 f3 00 are immediate data.
    const auto code = from_hex("636000f30001");
    const auto instrs = decode(code);
    ASSERT_EQ(instrs.size(), 2u);
    const auto split = split_creation(code);
    EXPECT_FALSE(split.found);
    EXPECT_EQ(split.runtime, code);
}

TEST(split_creation, first_boundary_wins)
{
    const auto code = from_hex("6000f300" "6001" "6000f300" "01");
    const auto split = split_creation(code);
    EXPECT_EQ(split.creation, from_hex("6000f300"));
    EXPECT_EQ(split.runtime, from_hex("60016000f30001"));
}

TEST(extract_runtime, input_kinds)
{
    const auto stub = from_hex("6000f300");
    const auto runtime = from_hex("600160010100");
    const auto full = concat({stub, runtime, swarm_a});
    EXPECT_EQ(extract_runtime(full, input_kind::auto_detect), runtime);
    EXPECT_EQ(extract_runtime(full, input_kind::creation), runtime);
    EXPECT_EQ(extract_runtime(full, input_kind::runtime), concat({stub, runtime}));
    EXPECT_THROW(extract_runtime(concat({runtime, swarm_a}), input_kind::creation), split_not_found);
    EXPECT_EQ(extract_runtime(concat({runtime, swarm_a}), input_kind::auto_detect), runtime);
    EXPECT_THROW(extract_runtime(swarm_a, input_kind::runtime), empty_bytecode);
    EXPECT_EQ(parse_input_kind("creation"), input_kind::creation);
    EXPECT_THROW(parse_input_kind("bogus"), config_error);
}

TEST(tokenize, drops_immediates)
{
    const auto t = tokenize(from_hex("6001600101"));
    EXPECT_EQ(t.opcode_bytes, from_hex("606001"));
    EXPECT_EQ(t.opcode_count, 3u);
    EXPECT_EQ(t.block_count, 1u);
    EXPECT_EQ(t.runtime_byte_len, 5u);
    EXPECT_FALSE(t.truncated_push);
}

TEST(tokenize, immediates_do_not_change_token_hash)
{
    const auto a = tokenize(from_hex("60AA60BB01"));
    const auto b = tokenize(from_hex("6001600201"));
    EXPECT_EQ(a.token_hash, b.token_hash);
    EXPECT_NE(a.runtime_hash, b.runtime_hash);
}

TEST(tokenize, single_stop)
{
    const auto t = tokenize(from_hex("00"));
    EXPECT_EQ(t.opcode_bytes, bytes{0x00});
    EXPECT_EQ(t.opcode_count, 1u);
    EXPECT_EQ(t.block_count, 1u);
}

TEST(tokenize, block_count_excludes_trailing_trigger)
{
    // PUSH1 JUMP PUSH1 RETURN: two pieces. PUSH1 JUMP ADD: two pieces.
    EXPECT_EQ(tokenize(from_hex("6000566000f3")).block_count, 2u);
    EXPECT_EQ(tokenize(from_hex("60005601")).block_count, 2u);
    EXPECT_TRUE(tokenize(from_hex("60005661")).truncated_push);
    EXPECT_THROW(tokenize({}), empty_bytecode);
}

TEST(tokenize, opcode_count_invariant_under_immediate_rewrites)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i)
    {
        const auto t = testkit::random_template(rng, 10);
        const auto a = tokenize(testkit::emit_runtime(t, rng));
        const auto b = tokenize(testkit::emit_runtime(t, rng));
        EXPECT_EQ(a.opcode_count, b.opcode_count);
        EXPECT_EQ(a.token_hash, b.token_hash);
    }
}

namespace
{
contract_record record(std::string id, const bytes& code, std::optional<int64_t> at)
{
    contract_record r;
    r.id = std::move(id);
    r.deployer = "0x00000000000000000000000000000000000000d1";
    r.raw_bytecode = code;
    r.deployed_at = at;
    return r;
}
}  // namespace

TEST(dedup, identical_contracts_collapse)
{
    const auto code = from_hex("6001600101");
    const auto res = dedup({record("0xb", code, 5), record("0xa", code, 9)});
    ASSERT_EQ(res.distinct.size(), 1u);
    ASSERT_EQ(res.groups.size(), 1u);
    EXPECT_EQ(res.groups[0].members, (std::vector<std::string>{"0xa", "0xb"}));
    // Earliest deployment is the representative.
    EXPECT_EQ(res.groups[0].representative, "0xb");
    EXPECT_EQ(res.distinct[0].representative.id, "0xb");
}

TEST(dedup, representative_tie_breaks_by_address_and_undated_last)
{
    const auto code = from_hex("6001600101");
    auto res = dedup({record("0xc", code, 1), record("0xb", code, 1), record("0xa", code, {})});
    EXPECT_EQ(res.groups[0].representative, "0xb");
    res = dedup({record("0xc", code, {}), record("0xb", code, {})});
    EXPECT_EQ(res.groups[0].representative, "0xb");
}

TEST(dedup, swarm_only_difference_collapses)
{
    const auto runtime = from_hex("6001600101");
    const auto res = dedup({record("0xa", concat({runtime, swarm_a}), 1),
        record("0xb", concat({runtime, swarm_b}), 2)});
    EXPECT_EQ(res.distinct.size(), 1u);
    EXPECT_EQ(res.distinct_runtime_count, 1u);
}

TEST(dedup, push_rewrites_collapse_but_count_as_distinct_runtimes)
{
    const auto res = dedup({record("0xa", from_hex("60AA60BB01"), 1),
        record("0xb", from_hex("6001600201"), 2)});
    EXPECT_EQ(res.distinct.size(), 1u);
    EXPECT_EQ(res.distinct_runtime_count, 2u);
}

TEST(dedup, representative_keeps_its_own_runtime)
{
    // The later-listed record is deployed first and becomes the representative.
    const auto late = from_hex("60AA60BB01");
    const auto early = from_hex("6001600201");
    const auto res = dedup({record("0xa", late, 9), record("0xb", early, 1)});
    ASSERT_EQ(res.distinct.size(), 1u);
    EXPECT_EQ(res.distinct[0].representative.id, "0xb");
    EXPECT_EQ(res.distinct[0].code.runtime_hash, sha256(early));
}

TEST(dedup, synthetic_templates_partition_the_corpus)
{
    testkit::corpus_options opts;
    opts.templates = 5;
    opts.copies_per_template = 20;
    opts.duplicate_every = 1;  // every copy differs from its template only in immediates
    const auto corpus = testkit::make_corpus(opts);
    ASSERT_EQ(corpus.records.size(), 100u);

    const auto res = dedup(corpus.records);
    EXPECT_EQ(res.distinct.size(), 5u);

    std::set<std::string> seen;
    size_t covered = 0;
    std::map<std::string, size_t> template_of;
    for (size_t i = 0; i < corpus.records.size(); ++i)
        template_of[corpus.records[i].id] = corpus.template_of[i];
    for (const auto& g : res.groups)
    {
        EXPECT_EQ(g.members.size(), 20u);
        for (const auto& m : g.members)
        {
            EXPECT_TRUE(seen.insert(m).second) << "member in two groups: " << m;
            EXPECT_EQ(template_of[m], template_of[g.representative]);
        }
        covered += g.members.size();
    }
    EXPECT_EQ(covered, corpus.records.size());
}
