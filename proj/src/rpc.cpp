// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <evmclone/corpus_io.hpp>
#include <evmclone/errors.hpp>
#include <evmclone/rpc.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <thread>

namespace evmclone
{
namespace
{
struct endpoint_parts
{
    std::string origin;  ///< scheme://host[:port]
    std::string path;
};

endpoint_parts split_endpoint(std::string_view endpoint)
{
    const auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string_view::npos)
        throw config_error(fmt::format("RPC endpoint '{}' must start with http:// or https://", endpoint));
    const auto path_begin = endpoint.find('/', scheme_end + 3);
    if (path_begin == std::string_view::npos)
        return {std::string(endpoint), "/"};
    return {std::string(endpoint.substr(0, path_begin)), std::string(endpoint.substr(path_begin))};
}
}  // namespace

std::string resolve_rpc_endpoint(std::string_view configured)
{
    if (const char* env = std::getenv(rpc_endpoint_env); env != nullptr && *env != '\0')
        return env;
    return std::string(configured);
}

fetched_code fetch_code(std::string_view endpoint, std::string_view address, const rpc_options& opts)
{
    fetched_code out;
    out.address = normalize_address(address);

    const auto parts = split_endpoint(endpoint);
    httplib::Client client(parts.origin);
    if (!client.is_valid())
        throw config_error(fmt::format("unsupported RPC endpoint '{}'", endpoint));
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(opts.timeout);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(opts.timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());

    const nlohmann::json request = {
        {"jsonrpc", "2.0"},
        {"id", 1},
        {"method", "eth_getCode"},
        {"params", {out.address, "latest"}},
    };
    const auto body = request.dump();

    std::string last_failure;
    auto backoff = opts.initial_backoff;
    const int attempts = std::max(1, opts.max_attempts);
    for (int attempt = 1; attempt <= attempts; ++attempt)
    {
        const auto res = client.Post(parts.path, body, "application/json");
        if (res && res->status >= 200 && res->status < 300)
        {
            nlohmann::json reply;
            try
            {
                reply = nlohmann::json::parse(res->body);
            }
            catch (const nlohmann::json::exception& e)
            {
                throw protocol_error(fmt::format("eth_getCode reply is not JSON: {}", e.what()));
            }
            if (!reply.is_object())
                throw protocol_error("eth_getCode reply is not a JSON object");
            if (const auto err = reply.find("error"); err != reply.end() && !err->is_null())
                throw rpc_error(fmt::format("eth_getCode failed: {}", err->dump()));
            const auto result = reply.find("result");
            if (result == reply.end() || !result->is_string())
                throw protocol_error("eth_getCode reply has no string result");
            const auto hex = result->get<std::string>();
            if (!hex.starts_with("0x"))
                throw protocol_error(fmt::format("eth_getCode result '{}' lacks 0x prefix", hex));
            try
            {
                out.code = from_hex(hex);
            }
            catch (const invalid_hex& e)
            {
                throw protocol_error(fmt::format("eth_getCode result: {}", e.what()));
            }
            out.empty_account = out.code.empty();
            return out;
        }

        if (res)
        {
            last_failure = fmt::format("HTTP {}", res->status);
            if (res->status < 500)
                throw rpc_error(fmt::format("{} answered {}", endpoint, last_failure));
        }
        else
            last_failure = httplib::to_string(res.error());

        if (attempt < attempts)
        {
            std::this_thread::sleep_for(backoff);
            backoff *= 2;
        }
    }
    throw rpc_error(fmt::format("{} unreachable after {} attempt(s): {}", endpoint, attempts, last_failure));
}
}  // namespace evmclone
