// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/analytics.hpp>
#include <evmclone/dappmatch.hpp>
#include <evmclone/evm_core.hpp>
#include <evmclone/fingerprint.hpp>
#include <evmclone/similarity.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evmclone
{
/// "0x" + 40 lowercase hex digits. Throws format_error otherwise.
std::string normalize_address(std::string_view address);

// ---- contract corpus (JSON lines) ------------------------------------------

struct import_error
{
    size_t line = 0;  ///< 1-based
    std::string message;
};

struct import_result
{
    std::vector<contract_record> records;
    std::vector<import_error> errors;
};

/// One JSON object per line with address, deployer, bytecode and optional
/// creation_kind ("user" | "contract") and deployed_at (unix seconds). Blank
/// lines are skipped; malformed lines land in `errors`.
import_result parse_records(std::istream& in);

/// Throws io_error when the file cannot be read.
import_result import_records(const std::filesystem::path& path);

std::string record_to_json_line(const contract_record& rec);

// ---- fingerprint database --------------------------------------------------

inline constexpr std::string_view fingerprint_db_format = "evmclone-fingerprint-db";

struct fingerprint_record
{
    std::string id;
    digest256 token_hash;
    digest256 runtime_hash;
    meta_attributes meta;
    fingerprint fp;
    bool truncated_push = false;
    int format_version = fingerprint_format_version;

    friend bool operator==(const fingerprint_record&, const fingerprint_record&) = default;
};

fingerprint_record make_fingerprint_record(const distinct_contract& c);

struct write_options
{
    /// Adds a creation time to headers. Off for byte-reproducible output.
    bool timestamp = true;
};

/// Header line carrying the format version, then one record per line. The file
/// is written to a temporary sibling and renamed into place.
void save_db(const std::filesystem::path& path, std::span<const fingerprint_record> records,
    const write_options& opts = {});

/// Throws version_error for a foreign format version or fingerprint scheme,
/// format_error for malformed content, io_error when unreadable.
std::vector<fingerprint_record> load_db(const std::filesystem::path& path);

std::vector<compare_entry> to_compare_entries(std::span<const fingerprint_record> records);

// ---- duplicate groups, contract index, corpus manifest ---------------------

void save_groups(const std::filesystem::path& path, const std::vector<duplicate_group>& groups);
std::vector<duplicate_group> load_groups(const std::filesystem::path& path);

struct contract_index_row
{
    std::string id;
    std::string deployer;
    creation_kind kind = creation_kind::user_created;
    digest256 token_hash;
    std::optional<int64_t> deployed_at;
};

/// CSV: id,deployer,creation_kind,token_hash,deployed_at.
void save_contract_index(const std::filesystem::path& path,
    const std::vector<contract_index_row>& rows);
std::vector<contract_index_row> load_contract_index(const std::filesystem::path& path);

struct corpus_manifest
{
    std::string source;
    size_t record_count = 0;
    size_t user_created = 0;
    size_t contract_created = 0;
    size_t distinct_runtime = 0;  ///< after Swarm removal
    size_t distinct_token = 0;    ///< after push-argument removal
    size_t rejected = 0;          ///< malformed input lines
};

void save_manifest(const std::filesystem::path& path, const corpus_manifest& m,
    const write_options& opts = {});
corpus_manifest load_manifest(const std::filesystem::path& path);

// ---- similar pairs (CSV) ---------------------------------------------------

/// Header "id_a,id_b,score", scores with one decimal.
void save_pairs(const std::filesystem::path& path, std::span<const similarity_pair> pairs,
    const write_options& opts = {});
std::vector<similarity_pair> load_pairs(const std::filesystem::path& path);

// ---- side inputs -----------------------------------------------------------

/// CSV token_hash,name. '#' lines and a "token_hash,name" header are ignored.
std::map<digest256, std::string> load_templates(const std::filesystem::path& path);

/// CSV contract_id,vuln_type,count. A contract listed only with zero counts is
/// a scanned, clean contract.
profile_map load_vulns(const std::filesystem::path& path);

/// JSON lines: name, contracts, deployers, volume, deployed_at, category.
std::vector<dapp_manifest> load_dapps(const std::filesystem::path& path);

/// Reads a text file whole. Throws io_error.
std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling and rename. Throws io_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view s);

/// "# generated <UTC ISO-8601>" comment line, or empty when disabled.
std::string timestamp_comment(const write_options& opts);
}  // namespace evmclone
