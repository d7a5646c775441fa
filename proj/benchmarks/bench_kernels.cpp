// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "addcomb/classify.hpp"
#include "addcomb/gaps.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/sumset.hpp"

using namespace addcomb;

namespace {

GroundSet dense_random(std::uint64_t window) {
  return generate(SetSpec::parse("random:0.1:17", window));
}

void BM_ksum_bitset(benchmark::State& state) {
  const GroundSet a = dense_random(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ksum(a, 2).size());
  state.SetItemsProcessed(state.iterations() * a.size());
}
BENCHMARK(BM_ksum_bitset)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_rep_convolution(benchmark::State& state) {
  const GroundSet a = dense_random(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rep_counts(a, 2).max_count());
  state.SetItemsProcessed(state.iterations() * a.size());
}
BENCHMARK(BM_rep_convolution)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

void BM_mian_chowla(benchmark::State& state) {
  const std::uint64_t w = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate(SetSpec::parse("mian-chowla", w)).size());
}
BENCHMARK(BM_mian_chowla)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_refine_scan(benchmark::State& state) {
  const GroundSet a = dense_random(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= 16; ++d) total += refine_step(a, a, d).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_refine_scan)->Arg(1 << 14)->Arg(1 << 17);

void BM_classify_pipeline(benchmark::State& state) {
  const SetSpec spec = SetSpec::parse("mian-chowla", 1 << 16);
  const GroundSet a = generate(spec);
  for (auto _ : state) {
    const auto report = classify(a, spec, Config{});
    benchmark::DoNotOptimize(report.verdict);
  }
}
BENCHMARK(BM_classify_pipeline);

}  // namespace

BENCHMARK_MAIN();
