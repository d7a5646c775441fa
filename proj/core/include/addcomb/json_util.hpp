// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace addcomb {

/// Integers above 2^53 round-trip through JSON as decimal strings; below
/// that they stay plain numbers.
inline nlohmann::json json_u64(std::uint64_t v) {
  constexpr std::uint64_t kDoubleSafe = std::uint64_t{1} << 53;
  if (v > kDoubleSafe) return std::to_string(v);
  return v;
}

inline std::uint64_t u64_from_json(const nlohmann::json& j) {
  if (j.is_string()) return std::stoull(j.get<std::string>());
  return j.get<std::uint64_t>();
}

}  // namespace addcomb
