// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "addcomb/dense_bits.hpp"
#include "addcomb/errors.hpp"

namespace addcomb {

/// Windows beyond this are refused outright: elements stay machine-word safe
/// under k-fold sums and the dense bit vector stays allocatable (1 GiB at the
/// cap). Desk-scale studies live far below it.
inline constexpr std::uint64_t kMaxWindow = std::uint64_t{1} << 33;

/// A finite set of naturals inside an explicit window [0, W].
///
/// The window is part of the value: every downstream analysis answers only
/// about [0, W] and refuses questions beyond it, so finite data is never
/// silently passed off as evidence about the whole of N. Storage is dual — a
/// strictly increasing element list for order queries and a dense bit vector
/// for membership and convolution. Immutable after construction; safe to
/// share across threads.
class GroundSet {
 public:
  GroundSet() = default;  // empty set, window 0

  /// Sorts the input; duplicate elements are a UsageError, elements beyond
  /// the window a WindowError, windows beyond kMaxWindow a CapacityError.
  GroundSet(std::vector<std::uint64_t> elements, std::uint64_t window);

  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::uint64_t window() const { return window_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(std::uint64_t x) const { return bits_.test(x); }
  /// Negatives and values beyond the window are never members.
  bool contains_signed(std::int64_t x) const {
    return x >= 0 && bits_.test(static_cast<std::uint64_t>(x));
  }

  std::uint64_t min() const;
  std::uint64_t max() const;

  /// Largest element strictly below y, if any.
  std::optional<std::uint64_t> pred_below(std::uint64_t y) const;
  /// Smallest element strictly above y, if any.
  std::optional<std::uint64_t> succ_above(std::uint64_t y) const;

  /// Whether [lo, hi] (clipped to [0, window]) contains an element.
  bool range_has_element(std::int64_t lo, std::int64_t hi) const;

  bool is_subset_of(const GroundSet& other) const;

  const DenseBits& bits() const { return bits_; }

  bool operator==(const GroundSet& other) const {
    return window_ == other.window_ && elements_ == other.elements_;
  }

  nlohmann::json to_json() const;
  static GroundSet from_json(const nlohmann::json& j);

 private:
  std::vector<std::uint64_t> elements_;
  std::uint64_t window_ = 0;
  DenseBits bits_{1};
};

/// A restricted to [0, n], window set to n. n beyond the window is a
/// WindowError: the proxy cannot speak beyond what it has seen.
GroundSet truncate(const GroundSet& a, std::uint64_t n);

}  // namespace addcomb
