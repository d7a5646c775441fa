// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "addcomb/json_util.hpp"
#include "addcomb/sumset.hpp"

namespace addcomb {

const char* to_string(ExtractionOutcome o) {
  switch (o) {
    case ExtractionOutcome::Found:
      return "found";
    case ExtractionOutcome::Absent:
      return "absent";
    case ExtractionOutcome::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

SumHypergraph SumHypergraph::build_sum(const GroundSet& a, std::uint64_t n, std::size_t k,
                                       std::uint64_t K, std::string source_id) {
  if (k < 2) throw UsageError("hypergraph arity must be >= 2");
  if (K < 1) throw UsageError("popularity threshold must be >= 1");
  if (n > a.window() / k)
    throw WindowError("popularity needs window >= " + std::to_string(n * k));

  const GroundSet an = truncate(a, n);
  const GroundSet akn = truncate(a, k * n);
  // Sums from A_{<=n} never exceed k*n, so popularity of A_{<=k*n} clipped
  // at k*n coincides with popularity in the full set.
  const RepProfile pop = rep_counts_clipped(akn, k, k * n);

  SumHypergraph h;
  h.k_ = k;
  h.sum_based_ = true;
  h.part_values_ = an.elements();
  h.n_ = n;
  h.K_ = K;
  h.source_id_ = std::move(source_id);
  h.unpopular_ = DenseBits(k * n + 1);

  const RepProfile own = rep_counts_clipped(an, k, k * n);
  std::uint64_t edges = 0;
  for (std::uint64_t x = 0; x <= k * n; ++x) {
    if (own.count(x) > 0 && pop.count(x) < K) {
      h.unpopular_.set(x);
      edges += own.count(x);
    }
  }
  h.edge_count_ = edges;
  return h;
}

SumHypergraph SumHypergraph::from_bipartite(std::vector<std::uint64_t> left,
                                            std::vector<std::uint64_t> right,
                                            std::vector<DenseBits> adjacency_rows,
                                            std::string source_id) {
  if (adjacency_rows.size() != left.size())
    throw UsageError("adjacency rows must match the left part");
  SumHypergraph h;
  h.k_ = 2;
  h.sum_based_ = false;
  h.part_values_ = std::move(left);
  h.right_values_ = std::move(right);
  h.adj_ = std::move(adjacency_rows);
  h.source_id_ = std::move(source_id);
  std::uint64_t edges = 0;
  for (const auto& row : h.adj_) edges += row.count();
  h.edge_count_ = edges;
  return h;
}

const std::vector<std::uint64_t>& SumHypergraph::part(std::size_t i) const {
  if (!sum_based_ && i == 1) return right_values_;
  return part_values_;
}

bool SumHypergraph::has_edge(std::span<const std::uint64_t> tuple) const {
  if (tuple.size() != k_) throw UsageError("edge tuple arity mismatch");
  if (sum_based_) {
    std::uint64_t s = 0;
    for (std::uint64_t v : tuple) s += v;
    return unpopular_.test(s);
  }
  const auto li = std::find(part_values_.begin(), part_values_.end(), tuple[0]);
  const auto ri = std::find(right_values_.begin(), right_values_.end(), tuple[1]);
  if (li == part_values_.end() || ri == right_values_.end()) return false;
  return adj_[static_cast<std::size_t>(li - part_values_.begin())].test(
      static_cast<std::uint64_t>(ri - right_values_.begin()));
}

DenseBits SumHypergraph::adjacency_row(std::size_t i) const {
  if (k_ != 2) throw UsageError("adjacency rows exist only for k = 2");
  if (!sum_based_) return adj_[i];
  DenseBits row(right_values_.empty() ? part_values_.size() : right_values_.size());
  const std::uint64_t a = part_values_[i];
  for (std::size_t j = 0; j < part_values_.size(); ++j) {
    if (unpopular_.test(a + part_values_[j])) row.set(j);
  }
  return row;
}

nlohmann::json Blocks::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : parts) {
    nlohmann::json els = nlohmann::json::array();
    for (std::uint64_t x : p.elements()) els.push_back(json_u64(x));
    arr.push_back(std::move(els));
  }
  return arr;
}

namespace {

struct BitRows {
  std::vector<DenseBits> rows;
  std::size_t width = 0;
};

// Exact K_{t,t} search on a bipartite graph: enumerate t-subsets of the left
// part in increasing index order, intersecting neighbourhoods and pruning on
// popcount. Nodes = subsets visited.
ExtractionResult bipartite_blocks(const SumHypergraph& h, std::size_t t,
                                  std::uint64_t node_budget) {
  const auto& left = h.part(0);
  const auto& right = h.part(1);
  BitRows rows;
  rows.width = right.size();
  rows.rows.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) rows.rows.push_back(h.adjacency_row(i));

  std::uint64_t nodes = 0;
  std::vector<std::size_t> stack;

  // Depth-first over increasing left indices; common_stack tracks the
  // running neighbourhood intersection of the chosen prefix.
  std::vector<DenseBits> common_stack;
  std::function<ExtractionResult(std::size_t)> rec = [&](std::size_t start) -> ExtractionResult {
    if (stack.size() == t) {
      const DenseBits& c = common_stack.back();
      if (c.count() >= t) {
        Blocks b;
        std::vector<std::uint64_t> lvals;
        for (std::size_t idx : stack) lvals.push_back(left[idx]);
        std::vector<std::uint64_t> rvals;
        for (std::uint64_t j : c.to_elements()) {
          rvals.push_back(right[j]);
          if (rvals.size() == t) break;
        }
        const std::uint64_t wl = *std::max_element(lvals.begin(), lvals.end());
        const std::uint64_t wr = *std::max_element(rvals.begin(), rvals.end());
        b.parts.push_back(GroundSet(lvals, wl));
        b.parts.push_back(GroundSet(rvals, wr));
        b.t = t;
        return {ExtractionOutcome::Found, std::move(b), nodes};
      }
      return {ExtractionOutcome::Absent, std::nullopt, nodes};
    }
    for (std::size_t i = start; i < rows.rows.size(); ++i) {
      if (++nodes > node_budget) return {ExtractionOutcome::Indeterminate, std::nullopt, nodes};
      DenseBits next(rows.width);
      if (stack.empty()) {
        next = rows.rows[i];
      } else {
        const auto& prev = common_stack.back();
        for (std::size_t w = 0; w < next.words().size(); ++w)
          next.words()[w] = prev.words()[w] & rows.rows[i].words()[w];
      }
      if (next.count() < t) continue;
      stack.push_back(i);
      common_stack.push_back(std::move(next));
      ExtractionResult r = rec(i + 1);
      stack.pop_back();
      common_stack.pop_back();
      if (r.outcome != ExtractionOutcome::Absent) return r;
    }
    return {ExtractionOutcome::Absent, std::nullopt, nodes};
  };
  return rec(0);
}

// DFS for k >= 3 over sum-based graphs: blocks are chosen part by part in
// increasing element order; a candidate survives only if every partial sum
// it induces can still complete to an unpopular total (checked against
// precomputed suffix sumsets).
struct KpartiteSearch {
  const SumHypergraph& h;
  std::size_t t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<DenseBits> completable;  // [j] = sums completable with k-j more summands
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint64_t> partial_sums;  // sums over chosen prefix blocks (full parts only)

  explicit KpartiteSearch(const SumHypergraph& graph, std::size_t tt, std::uint64_t b)
      : h(graph), t(tt), budget(b) {
    const std::size_t k = h.arity();
    const auto& vals = h.part(0);
    const std::uint64_t cap = h.unpopular_sums().bit_count();
    // completable[j][x] = exists y in (k-j)-fold sums of the part values with
    // x + y unpopular; completable[k] is the unpopular indicator itself.
    completable.assign(k + 1, DenseBits(cap));
    completable[k] = h.unpopular_sums();
    for (std::size_t j = k; j-- > 0;) {
      DenseBits cur(cap);
      for (std::uint64_t a : vals) cur.or_shifted_down(completable[j + 1], a);
      completable[j] = std::move(cur);
    }
  }

  bool viable(std::uint64_t sum, std::size_t parts_done) const {
    return completable[parts_done].test(sum);
  }

  ExtractionOutcome run(Blocks* out) {
    blocks.assign(h.arity(), {});
    partial_sums = {0};
    return choose_part(0, out);
  }

  ExtractionOutcome choose_part(std::size_t part, Blocks* out) {
    if (part == h.arity()) {
      std::vector<GroundSet> gs;
      for (const auto& b : blocks) gs.push_back(GroundSet(b, b.back()));
      *out = Blocks{std::move(gs), t};
      return ExtractionOutcome::Found;
    }
    return choose_vertex(part, 0, out);
  }

  ExtractionOutcome choose_vertex(std::size_t part, std::size_t start, Blocks* out) {
    auto& block = blocks[part];
    if (block.size() == t) {
      // Part complete: fold its vertices into the partial sums.
      std::vector<std::uint64_t> sums;
      sums.reserve(partial_sums.size() * t);
      for (std::uint64_t s : partial_sums)
        for (std::uint64_t v : block) sums.push_back(s + v);
      std::vector<std::uint64_t> saved = std::move(partial_sums);
      partial_sums = std::move(sums);
      const ExtractionOutcome r = choose_part(part + 1, out);
      partial_sums = std::move(saved);
      return r;
    }
    const auto& vals = h.part(part);
    for (std::size_t i = start; i < vals.size(); ++i) {
      if (++nodes > budget) return ExtractionOutcome::Indeterminate;
      const std::uint64_t v = vals[i];
      bool ok = true;
      for (std::uint64_t s : partial_sums) {
        if (!viable(s + v, part + 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      block.push_back(v);
      const ExtractionOutcome r = choose_vertex(part, i + 1, out);
      block.pop_back();
      if (r != ExtractionOutcome::Absent) return r;
    }
    return ExtractionOutcome::Absent;
  }
};

}  // namespace

ExtractionResult find_complete_kpartite(const SumHypergraph& h, std::size_t t,
                                        std::uint64_t node_budget) {
  if (t < 1) throw UsageError("block size must be >= 1");
  for (std::size_t i = 0; i < h.arity(); ++i) {
    if (h.part_size(i) < t) return {ExtractionOutcome::Absent, std::nullopt, 0};
  }
  if (t == 1 && h.is_sum_based()) {
    // Any single edge yields blocks.
    const auto& vals = h.part(0);
    for (std::uint64_t x : h.unpopular_sums().to_elements()) {
      // Find one tuple summing to x by greedy digitization over the parts.
      std::vector<std::uint64_t> tuple;
      std::function<bool(std::size_t, std::uint64_t)> pick = [&](std::size_t part,
                                                                 std::uint64_t rest) -> bool {
        if (part == h.arity()) return rest == 0;
        for (std::uint64_t v : vals) {
          if (v > rest) break;
          tuple.push_back(v);
          if (pick(part + 1, rest - v)) return true;
          tuple.pop_back();
        }
        return false;
      };
      if (pick(0, x)) {
        Blocks b;
        for (std::uint64_t v : tuple) b.parts.push_back(GroundSet({v}, v));
        b.t = 1;
        return {ExtractionOutcome::Found, std::move(b), 1};
      }
    }
    return {ExtractionOutcome::Absent, std::nullopt, 1};
  }
  if (h.arity() == 2) return bipartite_blocks(h, t, node_budget);
  if (!h.is_sum_based())
    throw UsageError("k >= 3 extraction is only implemented for sum-based graphs");
  KpartiteSearch search(h, t, node_budget);
  Blocks found;
  const ExtractionOutcome outcome = search.run(&found);
  if (outcome == ExtractionOutcome::Found)
    return {outcome, std::move(found), search.nodes};
  return {outcome, std::nullopt, search.nodes};
}

std::uint64_t kst_edge_threshold(std::size_t t, std::size_t k, std::uint64_t n, Rational c) {
  if (t < 2 || k < 2) throw UsageError("threshold needs t, k >= 2");
  if (!c.positive()) throw UsageError("threshold constant must be positive");
  if (n == 0) return 0;
  // Exponent k - 1/T with T = t^(k-1): the least integer e with
  //   e >= C * n^((kT-1)/T)  <=>  (e*q)^T >= p^T * n^(kT-1)   (C = p/q).
  long double texp = 1;
  for (std::size_t i = 1; i < k; ++i) texp *= static_cast<long double>(t);
  const long double exponent =
      static_cast<long double>(k) - 1.0L / texp;
  const long double estimate =
      static_cast<long double>(c.num) / c.den * std::pow(static_cast<long double>(n), exponent);

  unsigned __int128 T = 1;
  bool t_over = false;
  for (std::size_t i = 1; i < k; ++i) {
    T *= t;
    if (T > 10000) {
      t_over = true;
      break;
    }
  }
  if (t_over || estimate > 1e30L) {
    // Exact confirmation is out of integer range; the long double estimate
    // carries ~18 digits which is far beyond the ambiguity here.
    return static_cast<std::uint64_t>(std::ceil(estimate));
  }
  const std::uint64_t texp_u = static_cast<std::uint64_t>(T);

  // Saturating compare of (e*q)^T vs p^T * n^(kT-1).
  auto pow_sat = [](unsigned __int128 base, std::uint64_t exp,
                    unsigned __int128 cap) -> unsigned __int128 {
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && acc > cap / base) return cap;
      acc *= base;
    }
    return acc;
  };
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 126;
  auto ge_exact = [&](std::uint64_t e) -> bool {
    const unsigned __int128 lhs = pow_sat(static_cast<unsigned __int128>(e) * c.den, texp_u, cap);
    unsigned __int128 rhs = pow_sat(c.num, texp_u, cap);
    if (rhs < cap) {
      const unsigned __int128 nf = pow_sat(n, static_cast<std::uint64_t>(k) * texp_u - 1, cap);
      if (nf >= cap || rhs > cap / (nf == 0 ? 1 : nf))
        rhs = cap;
      else
        rhs *= nf;
    }
    if (lhs >= cap && rhs >= cap)
      return true;  // both saturated: fall back to the estimate's verdict
    return lhs >= rhs;
  };

  std::uint64_t e = estimate < 1 ? 1 : static_cast<std::uint64_t>(estimate);
  while (e > 1 && ge_exact(e - 1)) --e;
  while (!ge_exact(e)) ++e;
  return e;
}

UnpopularResult unpopular_blocks(const GroundSet& a, std::size_t k, std::uint64_t K,
                                 std::size_t t, std::span<const std::uint64_t> n_grid,
                                 Rational c_const, std::uint64_t node_budget) {
  if (n_grid.empty()) throw UsageError("empty search grid");
  if (n_grid.back() > a.window() / k)
    throw WindowError("grid needs window >= " + std::to_string(n_grid.back() * k));
  UnpopularResult result;
  bool saw_indeterminate = false;
  for (std::uint64_t n : n_grid) {
    SumHypergraph h = SumHypergraph::build_sum(a, n, k, K);
    UnpopularDiag diag;
    diag.n = n;
    diag.part_size = h.part_size(0);
    diag.edge_count = h.edge_count();
    if (h.part_size(0) < t) {
      diag.threshold = 0;
      diag.note = "part too small";
      result.diagnostics.push_back(std::move(diag));
      continue;
    }
    const std::uint64_t threshold =
        t >= 2 ? kst_edge_threshold(t, k, h.part_size(0), c_const) : 0;
    diag.threshold = threshold;
    if (h.edge_count() <= threshold && t >= 2) {
      diag.note = "edge count at or below threshold";
      result.diagnostics.push_back(std::move(diag));
      continue;
    }
    ExtractionResult ex = find_complete_kpartite(h, t, node_budget);
    result.budget_used += ex.nodes_used;
    if (ex.outcome == ExtractionOutcome::Found) {
      diag.note = "extracted";
      result.diagnostics.push_back(std::move(diag));
      result.outcome = ExtractionOutcome::Found;
      result.blocks = std::move(ex.blocks);
      result.n = n;
      result.edge_count = h.edge_count();
      result.threshold = threshold;
      return result;
    }
    if (ex.outcome == ExtractionOutcome::Indeterminate) {
      saw_indeterminate = true;
      diag.note = "budget exhausted";
    } else {
      diag.note = "no complete k-partite subgraph";
    }
    result.diagnostics.push_back(std::move(diag));
  }
  result.outcome =
      saw_indeterminate ? ExtractionOutcome::Indeterminate : ExtractionOutcome::Absent;
  return result;
}

}  // namespace addcomb
