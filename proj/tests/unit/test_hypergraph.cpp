// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <random>

#include "addcomb/hypergraph.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/sumset.hpp"

using namespace addcomb;

namespace {

// Exhaustive 4-cycle oracle over an explicit bipartite adjacency.
bool has_k22_slow(const std::vector<DenseBits>& rows) {
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = u + 1; v < rows.size(); ++v) {
      std::uint64_t common = 0;
      for (std::size_t w = 0; w < rows[u].words().size(); ++w)
        common += static_cast<std::uint64_t>(std::popcount(rows[u].words()[w] & rows[v].words()[w]));
      if (common >= 2) return true;
    }
  }
  return false;
}

SumHypergraph seeded_bipartite(std::uint64_t seed, double density, std::size_t n = 32) {
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold = static_cast<std::uint64_t>(density * 9007199254740992.0);
  std::vector<std::uint64_t> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(i);
    right.push_back(i);
  }
  std::vector<DenseBits> rows(n, DenseBits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((rng() >> 11) < threshold) rows[i].set(j);
    }
  }
  return SumHypergraph::from_bipartite(std::move(left), std::move(right), std::move(rows));
}

}  // namespace

TEST_CASE("sum hypergraph edges are the unpopular sums") {
  GroundSet a({0, 1, 3}, 6);
  const SumHypergraph h = SumHypergraph::build_sum(a, 3, 2, 2);
  CHECK(h.edge_count() == 3);
  // The three edges are the diagonal pairs summing to {0, 2, 6}.
  for (std::uint64_t x : {0u, 2u, 6u}) CHECK(h.unpopular_sums().test(x));
  for (std::uint64_t x : {1u, 3u, 4u}) CHECK_FALSE(h.unpopular_sums().test(x));
  const std::vector<std::uint64_t> e1{0, 0}, e2{1, 1}, e3{0, 1};
  CHECK(h.has_edge(e1));
  CHECK(h.has_edge(e2));
  CHECK_FALSE(h.has_edge(e3));

  CHECK(SumHypergraph::build_sum(a, 3, 2, 1).edge_count() == 0);
  CHECK(SumHypergraph::build_sum(a, 3, 2, 100).edge_count() == 9);
  CHECK_THROWS_AS(SumHypergraph::build_sum(a, 4, 2, 2), WindowError);
}

TEST_CASE("complete bipartite blocks are found immediately") {
  std::vector<DenseBits> rows(2, DenseBits(2));
  rows[0].set(0);
  rows[0].set(1);
  rows[1].set(0);
  rows[1].set(1);
  const SumHypergraph h = SumHypergraph::from_bipartite({0, 1}, {0, 1}, std::move(rows));
  const ExtractionResult r = find_complete_kpartite(h, 2);
  REQUIRE(r.outcome == ExtractionOutcome::Found);
  CHECK(r.blocks->parts[0].elements() == std::vector<std::uint64_t>{0, 1});
  CHECK(r.blocks->parts[1].elements() == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("the six-cycle has no four-cycle") {
  // K_{3,3} minus a perfect matching.
  std::vector<DenseBits> rows(3, DenseBits(3));
  for (std::size_t i = 0; i < 3; ++i) {
    rows[i].set(i);
    rows[i].set((i + 1) % 3);
  }
  CHECK_FALSE(has_k22_slow(rows));
  const SumHypergraph h = SumHypergraph::from_bipartite({0, 1, 2}, {0, 1, 2}, std::move(rows));
  CHECK(find_complete_kpartite(h, 2).outcome == ExtractionOutcome::Absent);
}

TEST_CASE("three diagonal edges contain no K_{2:2}") {
  GroundSet a({0, 1, 3}, 6);
  const SumHypergraph h = SumHypergraph::build_sum(a, 3, 2, 2);
  CHECK(find_complete_kpartite(h, 2).outcome == ExtractionOutcome::Absent);
}

TEST_CASE("bipartite extraction agrees with the exhaustive oracle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const double density = 0.05 + 0.05 * static_cast<double>(seed);
    const SumHypergraph h = seeded_bipartite(9000 + seed, density);
    std::vector<DenseBits> rows;
    for (std::size_t i = 0; i < 32; ++i) rows.push_back(h.adjacency_row(i));
    const bool expect = has_k22_slow(rows);
    const ExtractionResult r = find_complete_kpartite(h, 2);
    CHECK(r.outcome == (expect ? ExtractionOutcome::Found : ExtractionOutcome::Absent));
    if (r.outcome == ExtractionOutcome::Found) {
      // Every cross pair must be an edge.
      for (std::uint64_t u : r.blocks->parts[0].elements()) {
        for (std::uint64_t v : r.blocks->parts[1].elements()) {
          const std::vector<std::uint64_t> e{u, v};
          CHECK(h.has_edge(e));
        }
      }
    }
  }
}

TEST_CASE("budget exhaustion is indeterminate, not absence") {
  const SumHypergraph h = seeded_bipartite(123, 0.02);  // sparse: no K22 likely
  const ExtractionResult r = find_complete_kpartite(h, 2, /*node_budget=*/3);
  CHECK(r.outcome == ExtractionOutcome::Indeterminate);
}

TEST_CASE("KST edge thresholds are exact at integer boundaries") {
  CHECK(kst_edge_threshold(2, 2, 16, Rational(1, 1)) == 64);    // 16^(3/2)
  CHECK(kst_edge_threshold(3, 2, 27, Rational(1, 1)) == 243);   // 27^(5/3), exactly integral
  CHECK(kst_edge_threshold(2, 3, 8, Rational(1, 1)) == 305);    // ceil(8^(11/4))
  CHECK(kst_edge_threshold(2, 2, 32, Rational(1, 1)) == 182);   // ceil(32^(3/2))
  CHECK(kst_edge_threshold(2, 2, 100, Rational(1, 1)) == 1000); // 100^(3/2)
  CHECK(kst_edge_threshold(2, 2, 16, Rational(3, 2)) == 96);
  CHECK_THROWS_AS(kst_edge_threshold(1, 2, 16, Rational(1, 1)), UsageError);
}

TEST_CASE("k = 3 extraction on sum graphs") {
  GroundSet a({0, 1, 3}, 9);
  // Huge K: nothing is popular, every triple is an edge, blocks exist.
  const SumHypergraph all = SumHypergraph::build_sum(a, 3, 3, 1000);
  const ExtractionResult found = find_complete_kpartite(all, 2);
  REQUIRE(found.outcome == ExtractionOutcome::Found);
  for (const auto& part : found.blocks->parts) CHECK(part.size() == 2);

  // K = 2 leaves only the two diagonal triples (sums 0 and 9): no blocks.
  const SumHypergraph tight = SumHypergraph::build_sum(a, 3, 3, 2);
  CHECK(tight.edge_count() == 2);
  CHECK(find_complete_kpartite(tight, 2).outcome == ExtractionOutcome::Absent);
}

TEST_CASE("Markov bound on the popular set") {
  for (const char* spec : {"mian-chowla", "powers:2", "random:0.3:61"}) {
    GroundSet a = generate(SetSpec::parse(spec, 2048));
    for (std::size_t k : {2u, 3u}) {
      const std::uint64_t n = a.window() / (2 * k);
      const GroundSet akn = truncate(a, k * n);
      if (akn.empty()) continue;
      const RepProfile rep = rep_counts(akn, k);
      for (std::uint64_t K : {2u, 3u, 5u, 8u}) {
        const std::uint64_t d_size = popular(rep, K).size();
        unsigned __int128 rhs = 1;
        for (std::size_t i = 0; i < k; ++i) rhs *= akn.size();
        CHECK(static_cast<unsigned __int128>(K) * d_size <= rhs);
      }
    }
  }
}

TEST_CASE("unpopular blocks on the Sidon set certify through the popularity route") {
  GroundSet mc = generate(SetSpec::parse("mian-chowla", 10000));
  const auto grid = geometric_grid(mc.window() / 2, 6);
  const UnpopularResult r = unpopular_blocks(mc, 2, 3, 2, grid);
  REQUIRE(r.outcome == ExtractionOutcome::Found);
  CHECK(r.edge_count > r.threshold);

  // Independent re-certification via the sumset module.
  const GroundSet an = truncate(mc, r.n);
  std::vector<GroundSet> parts = r.blocks->parts;
  const GroundSet sums = ksum(std::span<const GroundSet>(parts));
  const GroundSet d_set = popular(rep_counts(truncate(mc, 2 * r.n), 2), 3);
  const GroundSet kan = ksum(an, 2);
  for (std::uint64_t s : sums.elements()) {
    CHECK(kan.contains(s));
    CHECK_FALSE(d_set.contains(s));
  }
}

TEST_CASE("the full interval never yields unpopular blocks") {
  std::vector<std::uint64_t> all;
  for (std::uint64_t i = 0; i <= 200; ++i) all.push_back(i);
  GroundSet nat(all, 200);
  const std::vector<std::uint64_t> grid{4, 8, 16, 32, 64, 100};
  const UnpopularResult r = unpopular_blocks(nat, 2, 3, 2, grid);
  CHECK(r.outcome == ExtractionOutcome::Absent);
  CHECK(r.diagnostics.size() == grid.size());
}

TEST_CASE("t = 1 blocks come from any single edge") {
  GroundSet a({0, 1, 3}, 6);
  const std::vector<std::uint64_t> grid{3};
  const UnpopularResult r = unpopular_blocks(a, 2, 2, 1, grid);
  REQUIRE(r.outcome == ExtractionOutcome::Found);
  std::uint64_t total = 0;
  for (const auto& part : r.blocks->parts) {
    CHECK(part.size() == 1);
    total += part.elements()[0];
  }
  for (std::uint64_t x : {0u, 2u, 6u}) {
    if (total == x) return;  // the tuple sums to an unpopular value
  }
  FAIL("block sum is not unpopular");
}

TEST_CASE("blocks serialize to element arrays") {
  Blocks b;
  b.parts.push_back(GroundSet({1, 2}, 2));
  b.parts.push_back(GroundSet({3, 4}, 4));
  b.t = 2;
  const auto j = b.to_json();
  CHECK(j.size() == 2);
  CHECK(j[0][1] == 2);
}
