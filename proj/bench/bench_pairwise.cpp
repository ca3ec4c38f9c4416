// evmclone: bytecode-level clone detection for Ethereum contracts
// Copyright 2026 The evmclone Authors.
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP pairwise kernel.

#include "synthetic.hpp"

#include <evmclone/fingerprint.hpp>
#include <evmclone/similarity.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <thread>

namespace
{
using namespace evmclone;

std::vector<compare_entry> make_entries(size_t templates)
{
    const auto corpus = testkit::make_corpus(
        {.templates = templates, .copies_per_template = 20, .pieces_per_template = 60, .duplicate_every = 0});
    std::vector<compare_entry> entries;
    entries.reserve(corpus.records.size());
    for (const auto& r : corpus.records)
    {
        const auto code = preprocess(r.raw_bytecode);
        entries.push_back({r.id, meta_of(code), generate_fp(code)});
    }
    return entries;
}

void bm_pairwise_serial(benchmark::State& state)
{
    const auto entries = make_entries(static_cast<size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pairwise_compare_serial(entries, default_prune_floor));
    state.counters["contracts"] = static_cast<double>(entries.size());
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(entries.size() * (entries.size() - 1) / 2));
}

void bm_pairwise_omp(benchmark::State& state)
{
    const auto entries = make_entries(static_cast<size_t>(state.range(0)));
    const auto workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(pairwise_compare(entries, default_prune_floor, workers));
    state.counters["contracts"] = static_cast<double>(entries.size());
    state.counters["workers"] = workers;
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(entries.size() * (entries.size() - 1) / 2));
}

void bm_edit_distance(benchmark::State& state)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<size_t> ch(0, b64_alphabet.size() - 1);
    std::string a(static_cast<size_t>(state.range(0)), ' ');
    std::string b(a.size(), ' ');
    for (size_t i = 0; i < a.size(); ++i)
    {
        a[i] = b64_alphabet[ch(rng)];
        b[i] = b64_alphabet[ch(rng)];
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(edit_distance(a, b));
    state.SetComplexityN(state.range(0));
}

const int max_workers = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
}  // namespace

BENCHMARK(bm_pairwise_serial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_pairwise_omp)
    ->ArgsProduct({{5, 20}, benchmark::CreateRange(1, max_workers, 2)})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(bm_edit_distance)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
