// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/analytics.hpp>
#include <evmclone/cluster.hpp>
#include <evmclone/corpus_io.hpp>
#include <evmclone/dappmatch.hpp>
#include <evmclone/errors.hpp>
#include <evmclone/evm_core.hpp>
#include <evmclone/fingerprint.hpp>
#include <evmclone/rpc.hpp>
#include <evmclone/similarity.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <filesystem>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace evmclone
{
namespace
{
struct run_config
{
    std::string input;
    std::string input_kind_name = "auto";
    double threshold = default_threshold;
    double prune_floor = default_prune_floor;
    int workers = 1;
    fs::path out = "evmclone-out";
    std::string templates;
    std::string vulns;
    std::string dapps;
    std::string rpc_url{default_rpc_endpoint};
    bool no_timestamp = false;

    write_options writes() const { return {.timestamp = !no_timestamp}; }
};

template <typename... Args>
void log(fmt::format_string<Args...> f, Args&&... args)
{
    fmt::print(stderr, "evmclone: {}\n", fmt::format(f, std::forward<Args>(args)...));
}

void require_file(const std::string& path, std::string_view flag)
{
    if (path.empty())
        throw config_error(fmt::format("{} is required", flag));
    if (!fs::is_regular_file(path))
        throw config_error(fmt::format("{} '{}' is not a readable file", flag, path));
}

void validate_percent(double value, std::string_view flag)
{
    try
    {
        validate_threshold(value);
    }
    catch (const config_error&)
    {
        throw config_error(fmt::format("{} must lie in [0, 100], got {}", flag, value));
    }
}

void validate_common(const run_config& cfg)
{
    validate_percent(cfg.threshold, "--threshold");
    validate_percent(cfg.prune_floor, "--prune-floor");
    if (cfg.workers < 1)
        throw config_error(fmt::format("--workers must be at least 1, got {}", cfg.workers));
    parse_input_kind(cfg.input_kind_name);
}

fs::path in_workdir(const run_config& cfg, std::string_view name)
{
    return cfg.out / name;
}

fs::path existing_artifact(const run_config& cfg, std::string_view name, std::string_view producer)
{
    auto p = in_workdir(cfg, name);
    if (!fs::is_regular_file(p))
        throw config_error(
            fmt::format("{} not found; run `evmclone {} --out {}` first", p.string(), producer, cfg.out.string()));
    return p;
}

// ---- disasm ----------------------------------------------------------------

bytes read_code_argument(const std::string& input)
{
    if (fs::is_regular_file(input))
    {
        auto text = read_file(input);
        std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
        return from_hex(text);
    }
    return from_hex(input);
}

int cmd_disasm(const run_config& cfg, bool kind_given)
{
    if (cfg.input.empty())
        throw config_error("--input is required (hex string or file holding hex)");
    const auto kind = parse_input_kind(cfg.input_kind_name);
    const auto raw = read_code_argument(cfg.input);
    const auto code = kind_given ? extract_runtime(raw, kind) : raw;
    fmt::print("{}", disassemble(code));
    return 0;
}

// ---- dedup / fingerprint ---------------------------------------------------

struct prepared_corpus
{
    std::vector<contract_record> records;
    dedup_result dedup;
    corpus_manifest manifest;
};

prepared_corpus prepare_corpus(const run_config& cfg)
{
    require_file(cfg.input, "--input");
    const auto kind = parse_input_kind(cfg.input_kind_name);

    auto imported = import_records(cfg.input);
    for (const auto& e : imported.errors)
        log("{}:{}: skipped: {}", cfg.input, e.line, e.message);

    prepared_corpus out;
    out.manifest.source = fs::path(cfg.input).filename().string();
    out.manifest.rejected = imported.errors.size();
    std::set<std::string> seen;
    for (auto& rec : imported.records)
    {
        if (!seen.insert(rec.id).second)
        {
            log("{}: duplicate address, keeping the first record", rec.id);
            ++out.manifest.rejected;
            continue;
        }
        try
        {
            extract_runtime(rec.raw_bytecode, kind);
        }
        catch (const error& e)
        {
            log("{}: skipped: {}", rec.id, e.what());
            ++out.manifest.rejected;
            continue;
        }
        out.records.push_back(std::move(rec));
    }
    if (out.records.empty())
        throw format_error(fmt::format("{} holds no usable contract records", cfg.input));

    out.dedup = dedup(out.records, kind);
    out.manifest.record_count = out.records.size();
    for (const auto& r : out.records)
        ++(r.kind == creation_kind::user_created ? out.manifest.user_created : out.manifest.contract_created);
    out.manifest.distinct_runtime = out.dedup.distinct_runtime_count;
    out.manifest.distinct_token = out.dedup.distinct.size();
    return out;
}

void write_corpus_artifacts(const run_config& cfg, const prepared_corpus& pc)
{
    fs::create_directories(cfg.out);
    save_groups(in_workdir(cfg, "groups.jsonl"), pc.dedup.groups);

    std::map<std::string, digest256> token_of;
    for (const auto& g : pc.dedup.groups)
        for (const auto& m : g.members)
            token_of[m] = g.token_hash;
    std::vector<contract_index_row> index;
    index.reserve(pc.records.size());
    for (const auto& r : pc.records)
        index.push_back({r.id, r.deployer, r.kind, token_of.at(r.id), r.deployed_at});
    std::sort(index.begin(), index.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    save_contract_index(in_workdir(cfg, "contracts.csv"), index);

    std::string distinct;
    for (const auto& d : pc.dedup.distinct)
        distinct += record_to_json_line(d.representative) + "\n";
    write_file_atomic(in_workdir(cfg, "distinct.jsonl"), distinct);

    std::string dups = timestamp_comment(cfg.writes()) + "rank,representative,token_hash,size\n";
    for (const auto& row : duplicate_stats(pc.dedup.groups))
        dups += fmt::format("{},{},{},{}\n", row.rank, row.representative, row.token_hash.hex(), row.size);
    write_file_atomic(in_workdir(cfg, "duplicates.csv"), dups);

    save_manifest(in_workdir(cfg, "manifest.json"), pc.manifest, cfg.writes());
}

void print_corpus_summary(const prepared_corpus& pc)
{
    const auto& m = pc.manifest;
    fmt::print("records:                       {}\n", m.record_count);
    fmt::print("  user created:                {}\n", m.user_created);
    fmt::print("  contract created:            {}\n", m.contract_created);
    fmt::print("distinct after Swarm removal:  {}\n", m.distinct_runtime);
    fmt::print("distinct after push removal:   {}\n", m.distinct_token);
    fmt::print("rejected input records:        {}\n", m.rejected);
}

int cmd_dedup(const run_config& cfg)
{
    const auto pc = prepare_corpus(cfg);
    write_corpus_artifacts(cfg, pc);
    print_corpus_summary(pc);
    log("wrote groups.jsonl, contracts.csv, distinct.jsonl, duplicates.csv, manifest.json to {}",
        cfg.out.string());
    return 0;
}

int cmd_fingerprint(const run_config& cfg)
{
    const auto pc = prepare_corpus(cfg);
    write_corpus_artifacts(cfg, pc);
    std::vector<fingerprint_record> records;
    records.reserve(pc.dedup.distinct.size());
    for (const auto& d : pc.dedup.distinct)
        records.push_back(make_fingerprint_record(d));
    save_db(in_workdir(cfg, "fingerprints.db"), records, cfg.writes());
    print_corpus_summary(pc);
    log("fingerprinted {} distinct contracts into {}", records.size(),
        in_workdir(cfg, "fingerprints.db").string());
    return 0;
}

// ---- compare ---------------------------------------------------------------

fs::path db_path(const run_config& cfg)
{
    if (!cfg.input.empty())
    {
        require_file(cfg.input, "--input");
        return cfg.input;
    }
    return existing_artifact(cfg, "fingerprints.db", "fingerprint");
}

int cmd_compare(const run_config& cfg)
{
    const auto records = load_db(db_path(cfg));
    const auto entries = to_compare_entries(records);
    // Everything at or above the floor is stored so `cluster` can re-threshold.
    const double cutoff = std::min(cfg.threshold, cfg.prune_floor);
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = pairwise_compare(entries, cutoff, cfg.workers);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

    fs::create_directories(cfg.out);
    save_pairs(in_workdir(cfg, "pairs.csv"), pairs, cfg.writes());
    const auto above = std::count_if(
        pairs.begin(), pairs.end(), [&](const auto& p) { return p.score >= cfg.threshold; });
    fmt::print("contracts compared:            {}\n", entries.size());
    fmt::print("pairs stored (score >= {:.1f}):  {}\n", cutoff, pairs.size());
    fmt::print("pairs at threshold {:.1f}:       {}\n", cfg.threshold, above);
    log("compared {} contracts with {} worker(s) in {:.2f}s", entries.size(), cfg.workers, elapsed.count());
    return 0;
}

// ---- cluster ---------------------------------------------------------------

std::map<std::string, std::string> template_labels(
    const std::string& templates_path, const std::vector<duplicate_group>& groups)
{
    std::map<std::string, std::string> labels;
    if (templates_path.empty())
        return labels;
    const auto templates = load_templates(templates_path);
    for (const auto& g : groups)
        if (const auto it = templates.find(g.token_hash); it != templates.end())
            labels[g.representative] = it->second;
    return labels;
}

int cmd_cluster(const run_config& cfg)
{
    if (!cfg.templates.empty())
        require_file(cfg.templates, "--templates");
    const auto pairs = load_pairs(existing_artifact(cfg, "pairs.csv", "compare"));
    const auto records = load_db(existing_artifact(cfg, "fingerprints.db", "fingerprint"));
    const auto groups = load_groups(existing_artifact(cfg, "groups.jsonl", "fingerprint"));

    std::vector<std::string> nodes;
    nodes.reserve(records.size());
    for (const auto& r : records)
        nodes.push_back(r.id);
    const auto graph = build_graph(pairs, cfg.threshold, nodes);
    auto result = connected_components(graph);
    auto clusters = expand_with_duplicates(std::move(result.clusters), group_sizes(groups));
    apply_labels(clusters, template_labels(cfg.templates, groups));
    sort_by_population(clusters);

    const auto wopts = cfg.writes();
    std::string csv = timestamp_comment(wopts) + "rank,size,distinct,population,label,members\n";
    std::string text;
    std::vector<uint64_t> sizes;
    size_t covered = 0;
    for (size_t i = 0; i < clusters.size(); ++i)
    {
        const auto& c = clusters[i];
        std::string members;
        for (const auto& m : c.members)
            members += (members.empty() ? "" : ";") + m;
        csv += fmt::format("{},{},{},{},{},{}\n", i + 1, csv_escape(format_cluster_size(c)), c.members.size(),
            c.total_population, csv_escape(c.label.value_or("")), members);
        text += fmt::format("{:>5}  {:>14}  {}\n", i + 1, format_cluster_size(c), c.label.value_or("-"));
        sizes.push_back(c.members.size());
        covered += c.total_population;
    }
    write_file_atomic(in_workdir(cfg, "clusters.csv"), csv);

    std::string singles;
    for (const auto& s : result.singletons)
        singles += s + "\n";
    write_file_atomic(in_workdir(cfg, "singletons.txt"), singles);

    json summary = {
        {"threshold", cfg.threshold},
        {"distinct_contracts", nodes.size()},
        {"clusters", clusters.size()},
        {"singletons", result.singletons.size()},
        {"contracts_in_clusters", covered},
    };
    fmt::print("threshold {:.1f}: {} clusters, {} isolated contracts\n", cfg.threshold, clusters.size(),
        result.singletons.size());
    fmt::print(" rank  distinct (all)  label\n{}", text);
    if (!sizes.empty())
    {
        const auto pareto = pareto_report(sizes);
        std::string cdf = timestamp_comment(wopts) + "rank,cluster_share,cumulative_share\n";
        for (const auto& pt : pareto.cdf)
            cdf += fmt::format("{},{:.4f},{:.4f}\n", pt.rank, pt.cluster_share, pt.cumulative_share);
        write_file_atomic(in_workdir(cfg, "pareto.csv"), cdf);
        summary["top1_share"] = pareto.top1_share;
        summary["top20_share"] = pareto.top20_share;
        fmt::print("{}\n{}\n", format_top_share(1, pareto.top1_share), format_top_share(20, pareto.top20_share));
    }
    write_file_atomic(in_workdir(cfg, "summary.json"), summary.dump(2) + "\n");
    log("wrote clusters.csv, singletons.txt, pareto.csv, summary.json to {}", cfg.out.string());
    return 0;
}

// ---- dapp ------------------------------------------------------------------

profile_lookup load_profiles(const run_config& cfg)
{
    const auto records = load_db(existing_artifact(cfg, "fingerprints.db", "fingerprint"));
    const auto index = load_contract_index(existing_artifact(cfg, "contracts.csv", "fingerprint"));
    std::map<digest256, const fingerprint_record*> by_token;
    for (const auto& r : records)
        by_token[r.token_hash] = &r;
    profile_lookup profiles;
    for (const auto& row : index)
    {
        const auto it = by_token.find(row.token_hash);
        if (it == by_token.end())
            throw format_error(fmt::format("contracts.csv lists {} with a token hash missing from the db", row.id));
        profiles[row.id] = {it->second->token_hash, it->second->meta, it->second->fp};
    }
    return profiles;
}

int cmd_dapp(const run_config& cfg)
{
    require_file(cfg.dapps, "--dapps");
    if (!cfg.templates.empty())
        require_file(cfg.templates, "--templates");
    const auto dapps = load_dapps(cfg.dapps);
    const auto profiles = load_profiles(cfg);
    template_set templates;
    if (!cfg.templates.empty())
        for (const auto& [hash, _] : load_templates(cfg.templates))
            templates.insert(hash);

    const auto res = detect_clones(dapps, profiles, templates, cfg.threshold);
    for (const auto& name : res.template_only)
        log("{}: every contract is a known template, excluded", name);

    const auto wopts = cfg.writes();
    std::string pairs = timestamp_comment(wopts) + "original,clone,score\n";
    for (const auto& p : res.pairs)
        pairs += fmt::format("{},{},{}\n", csv_escape(p.original), csv_escape(p.clone), format_score(p.score));
    write_file_atomic(in_workdir(cfg, "dapp_pairs.csv"), pairs);

    std::string clusters;
    for (const auto& c : res.clusters)
        clusters += json{{"original", c.original}, {"clones", c.clones}}.dump() + "\n";
    write_file_atomic(in_workdir(cfg, "dapp_clusters.jsonl"), clusters);

    const auto report = volume_impact(res.clusters, dapps);
    std::string csv = timestamp_comment(wopts) + "original,clones,original_volume,plagiarized_volume,ratio\n";
    std::string table = fmt::format("{:<32} {:>8} {:>18} {:>18} {:>10}\n", "Original DApp", "# Clones",
        "Original volume", "Plagiarized volume", "Ratio");
    const auto add_row = [&](const volume_row& r) {
        csv += fmt::format("{},{},{:.3f},{:.3f},{}\n", csv_escape(r.original), r.clone_count, r.original_volume,
            r.plagiarized_volume, format_ratio(r.ratio));
        table += fmt::format("{:<32} {:>8} {:>18} {:>18} {:>10}\n", r.original, r.clone_count,
            format_volume(r.original_volume), format_volume(r.plagiarized_volume), format_ratio(r.ratio));
    };
    for (const auto& r : report.rows)
        add_row(r);
    add_row(report.totals);
    write_file_atomic(in_workdir(cfg, "volume_report.csv"), csv);

    fmt::print("{} DApps, {} clone pairs, {} clone clusters\n\n{}", dapps.size(), res.pairs.size(),
        res.clusters.size(), table);
    log("wrote dapp_pairs.csv, dapp_clusters.jsonl, volume_report.csv to {}", cfg.out.string());
    return 0;
}

// ---- vuln ------------------------------------------------------------------

int cmd_vuln(const run_config& cfg)
{
    require_file(cfg.vulns, "--vulns");
    const auto profiles = load_vulns(cfg.vulns);
    auto pairs = load_pairs(existing_artifact(cfg, "pairs.csv", "compare"));
    std::erase_if(pairs, [&](const similarity_pair& p) { return p.score < cfg.threshold; });
    author_map authors;
    for (const auto& row : load_contract_index(existing_artifact(cfg, "contracts.csv", "fingerprint")))
        authors[row.id] = row.deployer;

    const auto table = build_provenance_table(pairs, profiles, authors);
    if (table.skipped_missing != 0)
        log("{} of {} pairs skipped: no scanner profile for at least one side", table.skipped_missing,
            pairs.size());

    json cells = json::object();
    for (size_t r = 0; r < 2; ++r)
    {
        json row = json::object();
        for (size_t k = 0; k < behavior_count; ++k)
            row[std::string(to_string(static_cast<behavior>(k)))] = table.cells[r][k];
        cells[std::string(to_string(static_cast<author_relation>(r)))] = row;
    }
    json report = {
        {"threshold", cfg.threshold},
        {"pairs", pairs.size()},
        {"classified", table.total()},
        {"skipped_missing", table.skipped_missing},
        {"cells", cells},
        {"same_vulnerability_ratio", table.same_vulnerability_ratio()},
    };
    const auto text = table.render();
    write_file_atomic(in_workdir(cfg, "provenance.txt"), text);
    write_file_atomic(in_workdir(cfg, "provenance.json"), report.dump(2) + "\n");
    fmt::print("{}", text);
    return 0;
}

// ---- fetch -----------------------------------------------------------------

constexpr std::string_view unknown_deployer = "0x0000000000000000000000000000000000000000";

int cmd_fetch(const run_config& cfg)
{
    require_file(cfg.input, "--input");
    const auto endpoint = resolve_rpc_endpoint(cfg.rpc_url);
    std::string out;
    size_t fetched = 0;
    size_t empty = 0;
    std::istringstream in(read_file(cfg.input));
    for (std::string line; std::getline(in, line);)
    {
        std::erase_if(line, [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
        if (line.empty() || line.starts_with('#'))
            continue;
        // address[,deployer[,creation_kind[,deployed_at]]]
        std::vector<std::string> f;
        std::istringstream fields(line);
        for (std::string field; std::getline(fields, field, ',');)
            f.push_back(field);
        const auto got = fetch_code(endpoint, f.at(0));
        if (got.empty_account)
        {
            log("{}: no code (externally owned or destroyed), skipped", got.address);
            ++empty;
            continue;
        }
        contract_record rec;
        rec.id = got.address;
        rec.deployer = f.size() > 1 && !f[1].empty() ? normalize_address(f[1]) : std::string(unknown_deployer);
        if (f.size() > 2 && !f[2].empty())
            rec.kind = parse_creation_kind(f[2]);
        if (f.size() > 3 && !f[3].empty())
            rec.deployed_at = std::stoll(f[3]);
        rec.raw_bytecode = got.code;
        out += record_to_json_line(rec) + "\n";
        ++fetched;
    }
    fs::create_directories(cfg.out);
    write_file_atomic(in_workdir(cfg, "fetched.jsonl"), out);
    fmt::print("fetched {} contracts, {} addresses without code\n", fetched, empty);
    log("wrote {}", in_workdir(cfg, "fetched.jsonl").string());
    return 0;
}
}  // namespace
}  // namespace evmclone

int main(int argc, char** argv)
{
    using namespace evmclone;
    run_config cfg;
    CLI::App app{"evmclone: bytecode-level clone detection for Ethereum contracts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "evmclone 0.1.0");

    const auto add_out = [&](CLI::App* s) {
        s->add_option("--out", cfg.out, "Work directory for artifacts")->capture_default_str();
        s->add_flag("--no-timestamp", cfg.no_timestamp, "Omit generation timestamps for byte-identical output");
    };
    const auto add_threshold = [&](CLI::App* s) {
        s->add_option("--threshold", cfg.threshold, "Similarity threshold in [0, 100]")->capture_default_str();
    };

    auto* disasm = app.add_subcommand("disasm", "Print the instruction listing of a bytecode");
    disasm->add_option("--input", cfg.input, "Hex string, or a file holding hex");
    auto* disasm_kind = disasm->add_option("--input-kind", cfg.input_kind_name,
        "Extract runtime code first: auto|runtime|creation");

    auto* dedup_cmd = app.add_subcommand("dedup", "Group a corpus by opcode sequence");
    auto* fingerprint_cmd = app.add_subcommand("fingerprint", "Deduplicate a corpus and build the fingerprint db");
    for (auto* s : {dedup_cmd, fingerprint_cmd})
    {
        s->add_option("--input", cfg.input, "Contract corpus (JSON lines)");
        s->add_option("--input-kind", cfg.input_kind_name, "auto|runtime|creation")->capture_default_str();
        add_out(s);
    }

    auto* compare = app.add_subcommand("compare", "Score all distinct contract pairs");
    compare->add_option("--input", cfg.input, "Fingerprint db (default: <out>/fingerprints.db)");
    add_threshold(compare);
    compare->add_option("--prune-floor", cfg.prune_floor, "Lowest score stored in pairs.csv")->capture_default_str();
    compare->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
    add_out(compare);

    auto* cluster = app.add_subcommand("cluster", "Connected components of the similarity graph");
    add_threshold(cluster);
    cluster->add_option("--templates", cfg.templates, "CSV token_hash,name used to label clusters");
    add_out(cluster);

    auto* dapp = app.add_subcommand("dapp", "Detect cloned DApps and their volumes");
    dapp->add_option("--dapps", cfg.dapps, "DApp manifests (JSON lines)");
    dapp->add_option("--templates", cfg.templates, "CSV token_hash,name of contracts to ignore");
    add_threshold(dapp);
    add_out(dapp);

    auto* vuln = app.add_subcommand("vuln", "Vulnerability provenance over similar pairs");
    vuln->add_option("--vulns", cfg.vulns, "Scanner findings CSV contract_id,vuln_type,count");
    add_threshold(vuln);
    add_out(vuln);

    auto* fetch = app.add_subcommand("fetch", "Download runtime code over JSON-RPC");
    fetch->add_option("--input", cfg.input, "Address list, one address[,deployer[,kind[,deployed_at]]] per line");
    fetch->add_option("--rpc-url", cfg.rpc_url, "Node endpoint; EVMCLONE_RPC_URL overrides")->capture_default_str();
    add_out(fetch);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e);
    }

    try
    {
        validate_common(cfg);
        if (*disasm)
            return cmd_disasm(cfg, disasm_kind->count() > 0);
        if (*dedup_cmd)
            return cmd_dedup(cfg);
        if (*fingerprint_cmd)
            return cmd_fingerprint(cfg);
        if (*compare)
            return cmd_compare(cfg);
        if (*cluster)
            return cmd_cluster(cfg);
        if (*dapp)
            return cmd_dapp(cfg);
        if (*vuln)
            return cmd_vuln(cfg);
        if (*fetch)
            return cmd_fetch(cfg);
    }
    catch (const config_error& e)
    {
        fmt::print(stderr, "evmclone: configuration error: {}\n", e.what());
        return 2;
    }
    catch (const error& e)
    {
        fmt::print(stderr, "evmclone: error: {}\n", e.what());
        return 1;
    }
    catch (const std::exception& e)
    {
        fmt::print(stderr, "evmclone: unexpected failure: {}\n", e.what());
        return 1;
    }
    return 0;
}
