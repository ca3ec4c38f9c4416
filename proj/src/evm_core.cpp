// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/errors.hpp>
#include <evmclone/evm_core.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace evmclone
{
std::vector<instruction> decode(bytes_view code)
{
    if (code.empty())
        throw empty_bytecode("cannot decode empty bytecode");

    std::vector<instruction> out;
    out.reserve(code.size());
    size_t pos = 0;
    while (pos < code.size())
    {
        instruction ins;
        ins.offset = pos;
        ins.opcode = code[pos];
        const size_t imm = immediate_size(ins.opcode);
        const size_t available = std::min(imm, code.size() - pos - 1);
        ins.immediate.assign(code.begin() + static_cast<ptrdiff_t>(pos + 1),
            code.begin() + static_cast<ptrdiff_t>(pos + 1 + available));
        if (available < imm)
        {
            ins.immediate.resize(imm, 0);
            ins.truncated = true;
        }
        pos += 1 + imm;
        out.push_back(std::move(ins));
    }
    return out;
}

bytes encode(const std::vector<instruction>& instrs)
{
    bytes out;
    for (const auto& ins : instrs)
    {
        out.push_back(ins.opcode);
        out.insert(out.end(), ins.immediate.begin(), ins.immediate.end());
    }
    return out;
}

std::string disassemble(bytes_view code)
{
    std::string out;
    for (const auto& ins : decode(code))
    {
        const auto& info = ins.info();
        out += fmt::format("{:04x}: {}", ins.offset, info.mnemonic);
        if (!info.defined)
            out += fmt::format(" (0x{:02x})", ins.opcode);
        if (!ins.immediate.empty())
            out += " 0x" + to_hex(ins.immediate);
        if (ins.truncated)
            out += " (truncated)";
        out += '\n';
    }
    return out;
}

std::optional<swarm_tail> find_swarm_tail(bytes_view code) noexcept
{
    constexpr size_t prefix_len = std::size(swarm_prefix);
    constexpr size_t suffix_len = std::size(swarm_suffix);
    if (code.size() < prefix_len + suffix_len)
        return std::nullopt;
    if (!std::equal(std::begin(swarm_suffix), std::end(swarm_suffix), code.end() - suffix_len))
        return std::nullopt;

    // The marker closest to the end wins: metadata is always the final trailer.
    const auto search_end = code.end() - static_cast<ptrdiff_t>(suffix_len);
    const auto it = std::find_end(code.begin(), search_end, std::begin(swarm_prefix),
        std::end(swarm_prefix));
    if (it == search_end)
        return std::nullopt;

    swarm_tail tail;
    tail.offset = static_cast<size_t>(it - code.begin());
    tail.length = code.size() - tail.offset;
    tail.standard_length = tail.length - 2 == swarm_standard_inner_length;
    return tail;
}

bytes strip_swarm(bytes_view code)
{
    const auto tail = find_swarm_tail(code);
    const size_t keep = tail ? tail->offset : code.size();
    return bytes(code.begin(), code.begin() + static_cast<ptrdiff_t>(keep));
}

split_code split_creation(bytes_view full)
{
    split_code out;
    if (!full.empty())
    {
        const auto instrs = decode(full);
        for (size_t i = 0; i + 2 < instrs.size(); ++i)
        {
            const auto& push = instrs[i];
            if (push.opcode == OP_PUSH1 && !push.truncated && push.immediate[0] == 0x00 &&
                instrs[i + 1].opcode == OP_RETURN && instrs[i + 2].opcode == OP_STOP)
            {
                const auto cut = static_cast<ptrdiff_t>(instrs[i + 2].offset + 1);
                out.creation.assign(full.begin(), full.begin() + cut);
                out.runtime.assign(full.begin() + cut, full.end());
                out.found = true;
                return out;
            }
        }
    }
    out.runtime.assign(full.begin(), full.end());
    return out;
}

input_kind parse_input_kind(std::string_view name)
{
    if (name == "auto")
        return input_kind::auto_detect;
    if (name == "runtime")
        return input_kind::runtime;
    if (name == "creation")
        return input_kind::creation;
    throw config_error(fmt::format("unknown input kind '{}' (expected auto|runtime|creation)", name));
}

std::string_view to_string(input_kind kind) noexcept
{
    switch (kind)
    {
    case input_kind::auto_detect:
        return "auto";
    case input_kind::runtime:
        return "runtime";
    case input_kind::creation:
        return "creation";
    }
    return "auto";
}

tokenized_code tokenize(bytes_view runtime)
{
    if (runtime.empty())
        throw empty_bytecode("runtime code is empty");

    tokenized_code out;
    const auto instrs = decode(runtime);
    out.opcode_bytes.reserve(instrs.size());
    for (const auto& ins : instrs)
    {
        out.opcode_bytes.push_back(ins.opcode);
        out.truncated_push = out.truncated_push || ins.truncated;
    }
    out.opcode_count = out.opcode_bytes.size();
    out.block_count = static_cast<size_t>(
        std::count_if(out.opcode_bytes.begin(), out.opcode_bytes.end() - 1, is_default_trigger)) + 1;
    out.runtime_byte_len = runtime.size();
    out.runtime_hash = sha256(runtime);
    out.token_hash = sha256(out.opcode_bytes);
    return out;
}

bytes extract_runtime(bytes_view raw, input_kind kind)
{
    if (raw.empty())
        throw empty_bytecode("bytecode is empty");

    bytes runtime;
    if (kind == input_kind::runtime)
        runtime.assign(raw.begin(), raw.end());
    else
    {
        auto split = split_creation(raw);
        if (!split.found && kind == input_kind::creation)
            throw split_not_found("no PUSH1 0x00 RETURN STOP boundary in creation bytecode");
        runtime = std::move(split.runtime);
    }
    auto code = strip_swarm(runtime);
    if (code.empty())
        throw empty_bytecode("no runtime code left after removing creation code and Swarm trailer");
    return code;
}

tokenized_code preprocess(bytes_view raw, input_kind kind)
{
    return tokenize(extract_runtime(raw, kind));
}

std::string_view to_string(creation_kind kind) noexcept
{
    return kind == creation_kind::user_created ? "user" : "contract";
}

creation_kind parse_creation_kind(std::string_view name)
{
    if (name == "user" || name == "user_created")
        return creation_kind::user_created;
    if (name == "contract" || name == "contract_created")
        return creation_kind::contract_created;
    throw format_error(fmt::format("unknown creation_kind '{}'", name));
}

bool deployed_before(const contract_record& a, const contract_record& b) noexcept
{
    if (a.deployed_at != b.deployed_at)
    {
        if (!a.deployed_at)
            return false;
        if (!b.deployed_at)
            return true;
        return *a.deployed_at < *b.deployed_at;
    }
    return a.id < b.id;
}

dedup_result dedup(const std::vector<contract_record>& corpus, input_kind kind)
{
    struct bucket
    {
        size_t representative;
        tokenized_code code;
        std::vector<std::string> members;
    };

    std::vector<bucket> buckets;
    std::unordered_map<digest256, size_t, digest256_hash> by_token;
    std::unordered_set<digest256, digest256_hash> runtimes;

    for (size_t i = 0; i < corpus.size(); ++i)
    {
        const auto& rec = corpus[i];
        auto code = preprocess(rec.raw_bytecode, kind);
        runtimes.insert(code.runtime_hash);
        const auto [it, inserted] = by_token.try_emplace(code.token_hash, buckets.size());
        if (inserted)
            buckets.push_back({i, std::move(code), {}});
        auto& b = buckets[it->second];
        b.members.push_back(rec.id);
        if (!inserted && deployed_before(rec, corpus[b.representative]))
        {
            b.representative = i;
            b.code = std::move(code);
        }
    }

    std::sort(buckets.begin(), buckets.end(), [&](const bucket& x, const bucket& y) {
        return corpus[x.representative].id < corpus[y.representative].id;
    });

    dedup_result out;
    out.distinct_runtime_count = runtimes.size();
    out.distinct.reserve(buckets.size());
    out.groups.reserve(buckets.size());
    for (auto& b : buckets)
    {
        std::sort(b.members.begin(), b.members.end());
        const auto& rep = corpus[b.representative];
        out.groups.push_back({b.code.token_hash, rep.id, std::move(b.members)});
        out.distinct.push_back({rep, std::move(b.code)});
    }
    return out;
}
}  // namespace evmclone
