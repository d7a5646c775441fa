// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "addcomb/dense_bits.hpp"
#include "addcomb/ground_set.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// k-partite k-graph on k copies of a vertex list. Two backings:
///  - sum-based: vertices are A_{<=n} and (a_1,...,a_k) is an edge iff
///    a_1+...+a_k lands in k·A_{<=n} minus the K-popular set D^k_K(A_{<=k·n})
///    (popularity evaluated at window k·n, which equals popularity in A for
///    sums this small). The edge set is implicit in one bit vector; edges
///    are only materialized for extraction.
///  - explicit bipartite (k = 2): an adjacency matrix, for arbitrary test
///    graphs.
class SumHypergraph {
 public:
  /// Requires k·n <= a.window (the popularity set needs A_{<=k·n}).
  static SumHypergraph build_sum(const GroundSet& a, std::uint64_t n, std::size_t k,
                                 std::uint64_t K, std::string source_id = {});

  static SumHypergraph from_bipartite(std::vector<std::uint64_t> left,
                                      std::vector<std::uint64_t> right,
                                      std::vector<DenseBits> adjacency_rows,
                                      std::string source_id = {});

  std::size_t arity() const { return k_; }
  const std::vector<std::uint64_t>& part(std::size_t i) const;
  std::size_t part_size(std::size_t i) const { return part(i).size(); }
  std::uint64_t edge_count() const { return edge_count_; }

  bool is_sum_based() const { return sum_based_; }
  /// Sum-based only: the unpopular-sum indicator over [0, k·n].
  const DenseBits& unpopular_sums() const { return unpopular_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t popularity_threshold() const { return K_; }
  const std::string& source_id() const { return source_id_; }

  /// Edge test on vertex values, one per part.
  bool has_edge(std::span<const std::uint64_t> tuple) const;

  /// Bipartite adjacency row for left index i (materializing for sum-based
  /// graphs); k = 2 only.
  DenseBits adjacency_row(std::size_t i) const;

 private:
  SumHypergraph() = default;
  std::size_t k_ = 2;
  bool sum_based_ = true;
  std::vector<std::uint64_t> part_values_;   // sum-based: shared by all parts
  std::vector<std::uint64_t> right_values_;  // explicit bipartite only
  DenseBits unpopular_;                      // sum-based
  std::vector<DenseBits> adj_;               // explicit bipartite
  std::uint64_t n_ = 0;
  std::uint64_t K_ = 0;
  std::uint64_t edge_count_ = 0;
  std::string source_id_;
};

/// Witness of a complete k-partite subgraph: one block of t vertices per
/// part, every cross tuple an edge. For sum-based graphs this is exactly a
/// family B_1,...,B_k with B_1+...+B_k avoiding D^k_K entirely.
struct Blocks {
  std::vector<GroundSet> parts;
  std::size_t t = 0;

  nlohmann::json to_json() const;  // array of element arrays
};

enum class ExtractionOutcome { Found, Absent, Indeterminate };
const char* to_string(ExtractionOutcome o);

struct ExtractionResult {
  ExtractionOutcome outcome = ExtractionOutcome::Absent;
  std::optional<Blocks> blocks;
  std::uint64_t nodes_used = 0;
};

/// Exhaustive K_{t:k} search. Exact for k = 2 (common-neighbourhood subset
/// enumeration) and for small t·k via depth-first search over the parts with
/// completability pruning. Budget exhaustion is reported as Indeterminate,
/// never as absence.
ExtractionResult find_complete_kpartite(const SumHypergraph& h, std::size_t t,
                                        std::uint64_t node_budget = 10'000'000);

/// ⌈C · n^(k - 1/t^(k-1))⌉ — the edge count above which a K_{t:k} is
/// guaranteed. Exact at integer boundaries (the ceiling is settled by an
/// integer power comparison, not floating point). Requires t, k >= 2, C > 0.
std::uint64_t kst_edge_threshold(std::size_t t, std::size_t k, std::uint64_t n, Rational c);

struct UnpopularDiag {
  std::uint64_t n = 0;
  std::uint64_t part_size = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t threshold = 0;
  std::string note;
};

struct UnpopularResult {
  ExtractionOutcome outcome = ExtractionOutcome::Absent;
  std::optional<Blocks> blocks;
  // Certificate fields, valid when found:
  std::uint64_t n = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t threshold = 0;
  std::uint64_t budget_used = 0;
  std::vector<UnpopularDiag> diagnostics;
};

/// Scans the grid for the first n where the sum-hypergraph's edge count
/// exceeds the KST threshold for |A_{<=n}| vertices per part and extraction
/// succeeds; returns the blocks plus certificate, or per-n diagnostics.
/// Requires k·max(grid) <= a.window.
UnpopularResult unpopular_blocks(const GroundSet& a, std::size_t k, std::uint64_t K,
                                 std::size_t t, std::span<const std::uint64_t> n_grid,
                                 Rational c_const = Rational::integer(1),
                                 std::uint64_t node_budget = 10'000'000);

}  // namespace addcomb
