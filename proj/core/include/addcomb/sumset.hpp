// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "addcomb/ground_set.hpp"
#include "addcomb/rational.hpp"

namespace addcomb {

/// A_1 + ... + A_k over window Σ windows, by iterated bit-vector
/// OR-convolution. All windows must agree; k >= 1; ksum of one set is the
/// set itself.
GroundSet ksum(std::span<const GroundSet> sets);
GroundSet ksum(const GroundSet& a, std::size_t k);

/// Ordered representation counts x ↦ r^k(x) over a k-fold sumset, plus the
/// source sizes. Exact: Σ_x count(x) = Π |A_i| always, and the support is
/// exactly the sumset.
class RepProfile {
 public:
  RepProfile(std::size_t k, std::uint64_t window, std::vector<std::uint64_t> counts,
             std::vector<std::uint64_t> source_sizes);

  std::size_t arity() const { return k_; }
  std::uint64_t window() const { return window_; }
  std::uint64_t count(std::uint64_t x) const { return x < counts_.size() ? counts_[x] : 0; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  const std::vector<std::uint64_t>& source_sizes() const { return source_sizes_; }

  std::uint64_t support_size() const;
  std::uint64_t total() const;  // Σ_x count(x)
  std::uint64_t max_count() const;
  GroundSet support() const;

  /// Columns x,count over the support.
  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  std::size_t k_;
  std::uint64_t window_;
  std::vector<std::uint64_t> counts_;  // dense over [0, window]
  std::vector<std::uint64_t> source_sizes_;
};

/// Exact ordered representation counts by dense integer convolution (order
/// matters: (a,b) and (b,a) are different representations). Capacity is
/// checked up front — Π |A_i| beyond 2^62 or a dense buffer beyond the
/// configured byte cap is a CapacityError, never a silent wraparound.
RepProfile rep_counts(std::span<const GroundSet> sets);
RepProfile rep_counts(const GroundSet& a, std::size_t k);

/// Internal ally of the hypergraph builder: counts exact on [0, cap] only.
RepProfile rep_counts_clipped(const GroundSet& a, std::size_t k, std::uint64_t cap);

/// D^k_K: elements of the sumset with at least K ordered representations.
GroundSet popular(const RepProfile& profile, std::uint64_t K);

/// Σ_{x ∈ k·A} r^k_A(x) = |A|^k, exactly. The module's internal oracle.
bool counting_check(const GroundSet& a, std::size_t k);

struct TuplingPoint {
  std::uint64_t n = 0;
  std::uint64_t truncated_size = 0;  // |A_{<=n}|
  std::uint64_t sumset_size = 0;     // |k·A_{<=n}|
  double ratio = 0.0;                // sumset_size / truncated_size^k
  bool empty_truncation = false;     // flagged, not fatal
};

/// Per-n growth ratios |k·A_{<=n}| / |A_{<=n}|^k with a liminf estimate
/// taken as the min over the tail fraction of the grid.
struct TuplingProfile {
  std::size_t k = 2;
  std::vector<TuplingPoint> points;
  double liminf_estimate = 0.0;
  double tail_fraction = 0.5;

  /// Columns n,ratio.
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

TuplingProfile tupling_profile(const GroundSet& a, std::size_t k,
                               std::span<const std::uint64_t> grid, double tail_fraction = 0.5);

/// Ascending geometric grid {⌈W/2^i⌉} with `points` entries, deduplicated.
std::vector<std::uint64_t> geometric_grid(std::uint64_t window, std::size_t points = 12);

/// Least n on the ladder n_r = k^r · m with |A_{<=k·n}| <= (k+ε) |A_{<=n}|.
/// The ladder search is guaranteed to succeed before ((k+ε)/k)^r |A_{<=m}|
/// exceeds m; running out of window before that cap is a WindowError naming
/// the required window. Requires A_{<=m} nonempty and ε > 0.
std::uint64_t growth_index(const GroundSet& a, std::size_t k, Rational epsilon, std::uint64_t m);

}  // namespace addcomb
