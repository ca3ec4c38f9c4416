// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/bytes.hpp>
#include <evmclone/errors.hpp>

#include <openssl/evp.h>


namespace evmclone
{
namespace
{
int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(bytes_view data)
{
    static constexpr auto hex_chars = "0123456789abcdef";
    std::string str;
    str.reserve(data.size() * 2);
    for (const auto b : data)
    {
        str.push_back(hex_chars[b >> 4]);
        str.push_back(hex_chars[b & 0xf]);
    }
    return str;
}

bytes from_hex(std::string_view hex)
{
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    if (hex.size() % 2 != 0)
        throw invalid_hex("odd number of hex digits");

    bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
    {
        const auto hi = hex_value(hex[i]);
        const auto lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw invalid_hex("invalid hex character at position " + std::to_string(i));
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

digest256 digest256::from_hex(std::string_view hex)
{
    const auto raw = evmclone::from_hex(hex);
    if (raw.size() != 32)
        throw invalid_hex("digest must be 32 bytes, got " + std::to_string(raw.size()));
    digest256 d;
    std::copy(raw.begin(), raw.end(), d.value.begin());
    return d;
}

digest256 sha256(bytes_view data)
{
    digest256 d;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), d.value.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != d.value.size())
        throw error("SHA-256 computation failed");
    return d;
}
}  // namespace evmclone
