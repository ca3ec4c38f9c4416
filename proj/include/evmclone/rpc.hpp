// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmclone/bytes.hpp>

#include <chrono>
#include <string>
#include <string_view>

namespace evmclone
{
/// Environment variable that overrides the configured node endpoint.
inline constexpr const char* rpc_endpoint_env = "EVMCLONE_RPC_URL";
inline constexpr std::string_view default_rpc_endpoint = "http://127.0.0.1:8545";

struct rpc_options
{
    std::chrono::milliseconds timeout{5000};
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{200};  ///< doubled after each failed attempt
};

struct fetched_code
{
    std::string address;  ///< normalized
    bytes code;
    /// No code at the address: an externally owned account or a destroyed contract.
    bool empty_account = false;
};

/// eth_getCode(address, "latest") over JSON-RPC/HTTP. Transport failures and
/// 5xx responses are retried with exponential backoff, then raise rpc_error.
/// A JSON-RPC error object raises rpc_error; an unparseable reply raises
/// protocol_error.
fetched_code fetch_code(std::string_view endpoint, std::string_view address,
    const rpc_options& opts = {});

/// The endpoint from EVMCLONE_RPC_URL when set, otherwise `configured`.
std::string resolve_rpc_endpoint(std::string_view configured);
}  // namespace evmclone
