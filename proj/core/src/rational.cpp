// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace addcomb {

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw UsageError("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::string p(text.substr(0, slash));
    const std::string q(text.substr(slash + 1));
    if (p.empty() || q.empty()) throw UsageError("malformed rational: " + std::string(text));
    return Rational(std::stoull(p), std::stoull(q));
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const std::string whole(text.substr(0, dot));
    const std::string frac(text.substr(dot + 1));
    if (frac.size() > 18) throw UsageError("decimal too precise: " + std::string(text));
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : std::stoull(whole);
    const std::uint64_t f = frac.empty() ? 0 : std::stoull(frac);
    return Rational(w * den + f, den);
  }
  return Rational(std::stoull(std::string(text)), 1);
}

bool rational_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  using u128 = unsigned __int128;
  return static_cast<u128>(a) * d <= static_cast<u128>(c) * b;
}

}  // namespace addcomb
