// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/corpus_io.hpp>
#include <evmclone/errors.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace evmclone
{
using nlohmann::json;
namespace fs = std::filesystem;

namespace
{
std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

bool is_blank_or_comment(std::string_view line)
{
    const auto first = line.find_first_not_of(" \t");
    return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string> split_csv(std::string_view line, size_t max_fields = 0)
{
    std::vector<std::string> fields;
    size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos || (max_fields != 0 && fields.size() + 1 == max_fields))
        {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    for (auto& f : fields)
    {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
    }
    return fields;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what)
{
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw format_error(fmt::format("invalid {} '{}'", what, text));
    return value;
}

double parse_double(std::string_view text, std::string_view what)
{
    try
    {
        size_t used = 0;
        const std::string s(text);
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw format_error("");
        return v;
    }
    catch (const std::exception&)
    {
        throw format_error(fmt::format("invalid {} '{}'", what, text));
    }
}

contract_record record_from_json(const json& j)
{
    if (!j.is_object())
        throw format_error("entry is not a JSON object");
    const auto required = [&](const char* key) -> const json& {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_string())
            throw format_error(fmt::format("missing string field '{}'", key));
        return *it;
    };

    contract_record rec;
    rec.id = normalize_address(required("address").get<std::string>());
    rec.deployer = normalize_address(required("deployer").get<std::string>());
    try
    {
        rec.raw_bytecode = from_hex(required("bytecode").get<std::string>());
    }
    catch (const invalid_hex& e)
    {
        throw format_error(fmt::format("bytecode: {}", e.what()));
    }
    if (rec.raw_bytecode.empty())
        throw format_error("bytecode is empty");
    if (const auto it = j.find("creation_kind"); it != j.end() && !it->is_null())
    {
        if (!it->is_string())
            throw format_error("creation_kind must be a string");
        rec.kind = parse_creation_kind(it->get<std::string>());
    }
    if (const auto it = j.find("deployed_at"); it != j.end() && !it->is_null())
    {
        if (!it->is_number_integer())
            throw format_error("deployed_at must be an integer (unix seconds)");
        rec.deployed_at = it->get<int64_t>();
    }
    return rec;
}

std::string utc_now()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string header_line(std::string_view text)
{
    return std::string(text) + '\n';
}
}  // namespace

std::string csv_escape(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (const char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string normalize_address(std::string_view address)
{
    std::string_view digits = address;
    if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
        digits.remove_prefix(2);
    if (digits.size() != 40)
        throw format_error(fmt::format("address '{}' is not 20 bytes", address));
    std::string out = "0x";
    for (const char c : digits)
    {
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw format_error(fmt::format("address '{}' has a non-hex character", address));
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error(fmt::format("cannot open {}", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw io_error(fmt::format("error reading {}", path.string()));
    return ss.str();
}

void write_file_atomic(const fs::path& path, std::string_view content)
{
    if (path.has_parent_path())
    {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error(fmt::format("cannot write {}", tmp.string()));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw io_error(fmt::format("error writing {}", tmp.string()));
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
        throw io_error(fmt::format("cannot move {} into place: {}", path.string(), ec.message()));
}

std::string timestamp_comment(const write_options& opts)
{
    if (!opts.timestamp)
        return {};
    return fmt::format("# generated {}\n", utc_now());
}

import_result parse_records(std::istream& in)
{
    import_result out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try
        {
            out.records.push_back(record_from_json(json::parse(line)));
        }
        catch (const json::exception& e)
        {
            out.errors.push_back({line_no, fmt::format("invalid JSON: {}", e.what())});
        }
        catch (const error& e)
        {
            out.errors.push_back({line_no, e.what()});
        }
    }
    return out;
}

import_result import_records(const fs::path& path)
{
    std::istringstream in(read_file(path));
    return parse_records(in);
}

std::string record_to_json_line(const contract_record& rec)
{
    json j = {
        {"address", rec.id},
        {"deployer", rec.deployer},
        {"creation_kind", std::string(to_string(rec.kind))},
        {"bytecode", "0x" + to_hex(rec.raw_bytecode)},
    };
    if (rec.deployed_at)
        j["deployed_at"] = *rec.deployed_at;
    else
        j["deployed_at"] = nullptr;
    return j.dump();
}

fingerprint_record make_fingerprint_record(const distinct_contract& c)
{
    fingerprint_record r;
    r.id = c.representative.id;
    r.token_hash = c.code.token_hash;
    r.runtime_hash = c.code.runtime_hash;
    r.meta = meta_of(c.code);
    r.fp = generate_fp(c.code);
    r.truncated_push = c.code.truncated_push;
    return r;
}

void save_db(const fs::path& path, std::span<const fingerprint_record> records,
    const write_options& opts)
{
    json header = {
        {"format", fingerprint_db_format},
        {"format_version", fingerprint_format_version},
        {"scheme", fingerprint_scheme},
        {"records", records.size()},
    };
    if (opts.timestamp)
        header["created_at"] = utc_now();

    std::string out = header.dump() + '\n';
    for (const auto& r : records)
    {
        if (r.format_version != fingerprint_format_version)
            throw version_error(fmt::format("record {} has format version {}, expected {}", r.id,
                r.format_version, fingerprint_format_version));
        const json j = {
            {"id", r.id},
            {"token_hash", r.token_hash.hex()},
            {"runtime_hash", r.runtime_hash.hex()},
            {"opcode_count", r.meta.opcode_count},
            {"block_count", r.meta.block_count},
            {"runtime_byte_len", r.meta.runtime_byte_len},
            {"fingerprint", r.fp.chars()},
            {"truncated_push", r.truncated_push},
        };
        out += j.dump();
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<fingerprint_record> load_db(const fs::path& path)
{
    const auto lines = lines_of(read_file(path));
    if (lines.empty())
        throw format_error(fmt::format("{}: missing header line", path.string()));

    std::vector<fingerprint_record> records;
    try
    {
        const auto header = json::parse(lines[0]);
        if (header.value("format", std::string{}) != fingerprint_db_format)
            throw format_error(fmt::format("{} is not a fingerprint database", path.string()));
        const auto version = header.at("format_version").get<int>();
        const auto scheme = header.value("scheme", std::string{});
        if (version != fingerprint_format_version || scheme != fingerprint_scheme)
            throw version_error(fmt::format(
                "{} was written with format version {} ({}); this build reads version {} ({})",
                path.string(), version, scheme, fingerprint_format_version, fingerprint_scheme));

        for (size_t i = 1; i < lines.size(); ++i)
        {
            if (lines[i].empty())
                continue;
            const auto j = json::parse(lines[i]);
            fingerprint_record r;
            r.id = j.at("id").get<std::string>();
            r.token_hash = digest256::from_hex(j.at("token_hash").get<std::string>());
            r.runtime_hash = digest256::from_hex(j.at("runtime_hash").get<std::string>());
            r.meta.opcode_count = j.at("opcode_count").get<size_t>();
            r.meta.block_count = j.at("block_count").get<size_t>();
            r.meta.runtime_byte_len = j.at("runtime_byte_len").get<size_t>();
            r.fp = fingerprint{j.at("fingerprint").get<std::string>()};
            r.truncated_push = j.at("truncated_push").get<bool>();
            r.format_version = version;
            records.push_back(std::move(r));
        }
    }
    catch (const json::exception& e)
    {
        throw format_error(fmt::format("{}: {}", path.string(), e.what()));
    }
    catch (const invalid_hex& e)
    {
        throw format_error(fmt::format("{}: {}", path.string(), e.what()));
    }
    return records;
}

std::vector<compare_entry> to_compare_entries(std::span<const fingerprint_record> records)
{
    std::vector<compare_entry> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back({r.id, r.meta, r.fp});
    return out;
}

void save_groups(const fs::path& path, const std::vector<duplicate_group>& groups)
{
    std::string out;
    for (const auto& g : groups)
    {
        const json j = {
            {"token_hash", g.token_hash.hex()},
            {"representative", g.representative},
            {"members", g.members},
        };
        out += j.dump();
        out += '\n';
    }
    write_file_atomic(path, out);
}

std::vector<duplicate_group> load_groups(const fs::path& path)
{
    std::vector<duplicate_group> groups;
    for (const auto& line : lines_of(read_file(path)))
    {
        if (is_blank_or_comment(line))
            continue;
        try
        {
            const auto j = json::parse(line);
            groups.push_back({digest256::from_hex(j.at("token_hash").get<std::string>()),
                j.at("representative").get<std::string>(),
                j.at("members").get<std::vector<std::string>>()});
        }
        catch (const json::exception& e)
        {
            throw format_error(fmt::format("{}: {}", path.string(), e.what()));
        }
    }
    return groups;
}

void save_contract_index(const fs::path& path, const std::vector<contract_index_row>& rows)
{
    std::string out = header_line("id,deployer,creation_kind,token_hash,deployed_at");
    for (const auto& r : rows)
    {
        out += fmt::format("{},{},{},{},{}\n", r.id, r.deployer, to_string(r.kind),
            r.token_hash.hex(), r.deployed_at ? std::to_string(*r.deployed_at) : std::string{});
    }
    write_file_atomic(path, out);
}

std::vector<contract_index_row> load_contract_index(const fs::path& path)
{
    std::vector<contract_index_row> rows;
    for (const auto& line : lines_of(read_file(path)))
    {
        if (is_blank_or_comment(line) || line.starts_with("id,"))
            continue;
        const auto f = split_csv(line);
        if (f.size() != 5)
            throw format_error(fmt::format("{}: expected 5 fields in '{}'", path.string(), line));
        contract_index_row r;
        r.id = f[0];
        r.deployer = f[1];
        r.kind = parse_creation_kind(f[2]);
        r.token_hash = digest256::from_hex(f[3]);
        if (!f[4].empty())
            r.deployed_at = parse_number<int64_t>(f[4], "deployed_at");
        rows.push_back(std::move(r));
    }
    return rows;
}

void save_manifest(const fs::path& path, const corpus_manifest& m, const write_options& opts)
{
    json j = {
        {"source", m.source},
        {"record_count", m.record_count},
        {"user_created", m.user_created},
        {"contract_created", m.contract_created},
        {"distinct_after_swarm_removal", m.distinct_runtime},
        {"distinct_after_push_removal", m.distinct_token},
        {"rejected", m.rejected},
    };
    if (opts.timestamp)
        j["generated_at"] = utc_now();
    write_file_atomic(path, j.dump(2) + '\n');
}

corpus_manifest load_manifest(const fs::path& path)
{
    try
    {
        const auto j = json::parse(read_file(path));
        corpus_manifest m;
        m.source = j.at("source").get<std::string>();
        m.record_count = j.at("record_count").get<size_t>();
        m.user_created = j.at("user_created").get<size_t>();
        m.contract_created = j.at("contract_created").get<size_t>();
        m.distinct_runtime = j.at("distinct_after_swarm_removal").get<size_t>();
        m.distinct_token = j.at("distinct_after_push_removal").get<size_t>();
        m.rejected = j.at("rejected").get<size_t>();
        return m;
    }
    catch (const json::exception& e)
    {
        throw format_error(fmt::format("{}: {}", path.string(), e.what()));
    }
}

void save_pairs(const fs::path& path, std::span<const similarity_pair> pairs,
    const write_options& opts)
{
    std::string out = timestamp_comment(opts) + header_line("id_a,id_b,score");
    for (const auto& p : pairs)
        out += fmt::format("{},{},{}\n", p.a, p.b, format_score(p.score));
    write_file_atomic(path, out);
}

std::vector<similarity_pair> load_pairs(const fs::path& path)
{
    std::vector<similarity_pair> pairs;
    for (const auto& line : lines_of(read_file(path)))
    {
        if (is_blank_or_comment(line) || line.starts_with("id_a,"))
            continue;
        const auto f = split_csv(line);
        if (f.size() != 3)
            throw format_error(fmt::format("{}: expected id_a,id_b,score in '{}'", path.string(), line));
        const double score = parse_double(f[2], "score");
        if (!(score >= 0.0 && score <= 100.0))
            throw format_error(fmt::format("{}: score {} out of range", path.string(), f[2]));
        pairs.push_back(make_pair(f[0], f[1], score));
    }
    return pairs;
}

std::map<digest256, std::string> load_templates(const fs::path& path)
{
    std::map<digest256, std::string> templates;
    for (const auto& line : lines_of(read_file(path)))
    {
        if (is_blank_or_comment(line) || line.starts_with("token_hash,"))
            continue;
        const auto f = split_csv(line, 2);
        try
        {
            templates[digest256::from_hex(f[0])] = f.size() > 1 ? f[1] : std::string{};
        }
        catch (const invalid_hex& e)
        {
            throw format_error(fmt::format("{}: {}", path.string(), e.what()));
        }
    }
    return templates;
}

profile_map load_vulns(const fs::path& path)
{
    profile_map profiles;
    for (const auto& line : lines_of(read_file(path)))
    {
        if (is_blank_or_comment(line) || line.starts_with("contract_id,"))
            continue;
        const auto f = split_csv(line);
        if (f.size() != 3)
            throw format_error(
                fmt::format("{}: expected contract_id,vuln_type,count in '{}'", path.string(), line));
        const auto id = normalize_address(f[0]);
        const auto type = parse_vuln_type(f[1]);
        const auto count = parse_number<uint32_t>(f[2], "count");
        auto& profile = profiles[id];
        profile.contract = id;
        profile.counts[static_cast<size_t>(type)] += count;
    }
    return profiles;
}

std::vector<dapp_manifest> load_dapps(const fs::path& path)
{
    std::vector<dapp_manifest> dapps;
    size_t line_no = 0;
    for (const auto& line : lines_of(read_file(path)))
    {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        try
        {
            const auto j = json::parse(line);
            dapp_manifest d;
            d.name = j.at("name").get<std::string>();
            for (const auto& c : j.at("contracts").get<std::vector<std::string>>())
                d.contracts.push_back(normalize_address(c));
            for (const auto& a : j.at("deployers").get<std::vector<std::string>>())
                d.deployers.push_back(normalize_address(a));
            d.volume = j.at("volume").get<double>();
            d.deployed_at = j.at("deployed_at").get<int64_t>();
            if (const auto it = j.find("category"); it != j.end() && it->is_string())
                d.category = it->get<std::string>();
            if (d.contracts.empty() || d.deployers.empty())
                throw format_error("contracts and deployers must be non-empty");
            if (d.volume < 0.0)
                throw format_error("volume must be non-negative");
            dapps.push_back(std::move(d));
        }
        catch (const json::exception& e)
        {
            throw format_error(fmt::format("{}:{}: {}", path.string(), line_no, e.what()));
        }
        catch (const format_error& e)
        {
            throw format_error(fmt::format("{}:{}: {}", path.string(), line_no, e.what()));
        }
    }
    return dapps;
}
}  // namespace evmclone
