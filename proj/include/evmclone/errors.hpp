// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace evmclone
{
/// Base of every error raised by the library. The CLI maps each subclass to a
/// diagnostic and a nonzero exit status.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define EVMCLONE_ERROR(NAME)                     \
    class NAME : public error                    \
    {                                            \
    public:                                      \
        using error::error;                      \
    }

EVMCLONE_ERROR(empty_bytecode);
EVMCLONE_ERROR(split_not_found);
EVMCLONE_ERROR(invalid_hex);
EVMCLONE_ERROR(degenerate_pair);
EVMCLONE_ERROR(unknown_representative);
EVMCLONE_ERROR(empty_matching);
EVMCLONE_ERROR(template_only);
EVMCLONE_ERROR(missing_profile);
EVMCLONE_ERROR(unknown_contract);
EVMCLONE_ERROR(io_error);
EVMCLONE_ERROR(rpc_error);
EVMCLONE_ERROR(protocol_error);
EVMCLONE_ERROR(version_error);
EVMCLONE_ERROR(config_error);
EVMCLONE_ERROR(format_error);

#undef EVMCLONE_ERROR
}  // namespace evmclone
