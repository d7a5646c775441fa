// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace addcomb {

/// Fixed-size bit vector over [0, bit_count). Backs set membership and the
/// sumset kernels; all hot loops run word-at-a-time.
class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(std::uint64_t bit_count)
      : bits_(bit_count), words_((bit_count + 63) / 64, 0) {}

  std::uint64_t bit_count() const { return bits_; }

  void set(std::uint64_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

  bool test(std::uint64_t i) const {
    if (i >= bits_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  /// this |= (src << shift). The receiver must already be wide enough.
  void or_shifted(const DenseBits& src, std::uint64_t shift);

  /// this |= (src >> shift), i.e. marks x whenever x+shift is set in src.
  void or_shifted_down(const DenseBits& src, std::uint64_t shift);

  std::vector<std::uint64_t> to_elements() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::uint64_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace addcomb
