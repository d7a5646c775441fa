// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/ground_set.hpp"

#include <algorithm>

#include "addcomb/json_util.hpp"

namespace addcomb {

GroundSet::GroundSet(std::vector<std::uint64_t> elements, std::uint64_t window)
    : elements_(std::move(elements)), window_(window) {
  if (window_ > kMaxWindow)
    throw CapacityError("window " + std::to_string(window_) + " exceeds supported bound 2^33");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i] == elements_[i - 1])
      throw UsageError("duplicate element " + std::to_string(elements_[i]));
  }
  if (!elements_.empty() && elements_.back() > window_)
    throw WindowError("element " + std::to_string(elements_.back()) + " beyond window " +
                      std::to_string(window_));
  bits_ = DenseBits(window_ + 1);
  for (std::uint64_t x : elements_) bits_.set(x);
}

std::uint64_t GroundSet::min() const {
  if (elements_.empty()) throw UsageError("min of empty set");
  return elements_.front();
}

std::uint64_t GroundSet::max() const {
  if (elements_.empty()) throw UsageError("max of empty set");
  return elements_.back();
}

std::optional<std::uint64_t> GroundSet::pred_below(std::uint64_t y) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), y);
  if (it == elements_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::optional<std::uint64_t> GroundSet::succ_above(std::uint64_t y) const {
  auto it = std::upper_bound(elements_.begin(), elements_.end(), y);
  if (it == elements_.end()) return std::nullopt;
  return *it;
}

bool GroundSet::range_has_element(std::int64_t lo, std::int64_t hi) const {
  if (hi < 0 || lo > hi) return false;
  const std::uint64_t l = lo < 0 ? 0 : static_cast<std::uint64_t>(lo);
  const std::uint64_t h = static_cast<std::uint64_t>(hi);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), l);
  return it != elements_.end() && *it <= h;
}

bool GroundSet::is_subset_of(const GroundSet& other) const {
  for (std::uint64_t x : elements_) {
    if (!other.contains(x)) return false;
  }
  return true;
}

nlohmann::json GroundSet::to_json() const {
  nlohmann::json els = nlohmann::json::array();
  for (std::uint64_t x : elements_) els.push_back(json_u64(x));
  return {{"window", json_u64(window_)}, {"elements", std::move(els)}};
}

GroundSet GroundSet::from_json(const nlohmann::json& j) {
  std::vector<std::uint64_t> els;
  for (const auto& e : j.at("elements")) els.push_back(u64_from_json(e));
  return GroundSet(std::move(els), u64_from_json(j.at("window")));
}

GroundSet truncate(const GroundSet& a, std::uint64_t n) {
  if (n > a.window())
    throw WindowError("truncate to " + std::to_string(n) + " beyond window " +
                      std::to_string(a.window()));
  auto it = std::upper_bound(a.elements().begin(), a.elements().end(), n);
  return GroundSet(std::vector<std::uint64_t>(a.elements().begin(), it), n);
}

}  // namespace addcomb
