// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "addcomb/errors.hpp"

namespace addcomb {

/// Exact non-negative rational. Used wherever the contracts demand exact
/// comparisons (the growth-index epsilon, the KST constant C, tail floors).
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0) throw UsageError("rational with zero denominator");
    normalize();
  }
  static Rational integer(std::uint64_t n) { return Rational(n, 1); }

  void normalize() {
    const std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool positive() const { return num > 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  /// Parses "p", "p/q" or a plain decimal like "0.25" (scaled by a power of ten).
  static Rational parse(std::string_view text);
};

/// a/b <= c/d over uint64 without overflow.
bool rational_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

}  // namespace addcomb
