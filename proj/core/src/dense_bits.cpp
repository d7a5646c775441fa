// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/dense_bits.hpp"

#include <bit>

namespace addcomb {

void DenseBits::or_shifted(const DenseBits& src, std::uint64_t shift) {
  const std::uint64_t word_off = shift >> 6;
  const unsigned bit_off = static_cast<unsigned>(shift & 63);
  const auto& sw = src.words_;
  if (bit_off == 0) {
    for (std::size_t i = 0; i < sw.size(); ++i) {
      if (sw[i]) words_[i + word_off] |= sw[i];
    }
    return;
  }
  for (std::size_t i = 0; i < sw.size(); ++i) {
    const std::uint64_t w = sw[i];
    if (!w) continue;
    words_[i + word_off] |= w << bit_off;
    const std::size_t hi = i + word_off + 1;
    if (hi < words_.size()) words_[hi] |= w >> (64 - bit_off);
  }
}

void DenseBits::or_shifted_down(const DenseBits& src, std::uint64_t shift) {
  const std::uint64_t word_off = shift >> 6;
  const unsigned bit_off = static_cast<unsigned>(shift & 63);
  const auto& sw = src.words_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::size_t j = i + word_off;
    if (j >= sw.size()) break;
    std::uint64_t w = sw[j] >> bit_off;
    if (bit_off != 0 && j + 1 < sw.size()) w |= sw[j + 1] << (64 - bit_off);
    words_[i] |= w;
  }
}

std::vector<std::uint64_t> DenseBits::to_elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(w));
      const std::uint64_t x = (static_cast<std::uint64_t>(i) << 6) | b;
      if (x < bits_) out.push_back(x);
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace addcomb
