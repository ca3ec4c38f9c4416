// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmclone/errors.hpp>
#include <evmclone/similarity.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace evmclone
{
meta_attributes meta_of(const tokenized_code& code) noexcept
{
    return {code.opcode_count, code.block_count, code.runtime_byte_len};
}

size_t edit_distance(std::string_view a, std::string_view b)
{
    if (a.size() < b.size())
        std::swap(a, b);
    // b is the shorter string: one row of |b| + 1 cells plus a scalar for the diagonal.
    std::vector<size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), size_t{0});
    for (size_t i = 1; i <= a.size(); ++i)
    {
        size_t diag = row[0];
        row[0] = i;
        for (size_t j = 1; j <= b.size(); ++j)
        {
            const size_t up = row[j];
            const size_t subst = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({up + 1, row[j - 1] + 1, subst});
            diag = up;
        }
    }
    return row[b.size()];
}

double similarity_score(std::string_view fp1, std::string_view fp2)
{
    const size_t longest = std::max(fp1.size(), fp2.size());
    if (longest == 0)
        throw degenerate_pair("both fingerprints are empty");
    const size_t distance = edit_distance(fp1, fp2);
    return (1.0 - static_cast<double>(distance) / static_cast<double>(longest)) * 100.0;
}

double similarity_score(const fingerprint& fp1, const fingerprint& fp2)
{
    return similarity_score(fp1.chars(), fp2.chars());
}

std::string format_score(double score)
{
    return fmt::format("{:.1f}", score);
}

void validate_threshold(double threshold, std::string_view what)
{
    if (!(threshold >= 0.0 && threshold <= 100.0))
        throw config_error(fmt::format("{} must be within [0, 100], got {}", what, threshold));
}

bool attribute_differs(size_t x, size_t y) noexcept
{
    const size_t hi = std::max(x, y);
    const size_t lo = std::min(x, y);
    // (hi - lo) / hi > 0.3, kept in integers so the filter is exact and symmetric.
    return (hi - lo) * 10 > hi * 3;
}

int differing_attributes(const meta_attributes& m1, const meta_attributes& m2) noexcept
{
    return static_cast<int>(attribute_differs(m1.opcode_count, m2.opcode_count)) +
           static_cast<int>(attribute_differs(m1.block_count, m2.block_count)) +
           static_cast<int>(attribute_differs(m1.runtime_byte_len, m2.runtime_byte_len));
}

similarity_pair make_pair(std::string_view x, std::string_view y, double score)
{
    if (y < x)
        std::swap(x, y);
    return {std::string(x), std::string(y), score};
}

void canonical_sort(std::vector<similarity_pair>& pairs)
{
    std::sort(pairs.begin(), pairs.end(), [](const similarity_pair& l, const similarity_pair& r) {
        return std::tie(l.a, l.b) < std::tie(r.a, r.b);
    });
}

bool score_candidate(const compare_entry& x, const compare_entry& y, double threshold,
    similarity_pair& out)
{
    if (!prune_filter(x.meta, y.meta))
        return false;
    const double score = similarity_score(x.fp, y.fp);
    if (score < threshold)
        return false;
    out = make_pair(x.id, y.id, score);
    return true;
}
}  // namespace evmclone
