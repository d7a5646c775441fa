// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/sumset.hpp"

#include <algorithm>
#include <sstream>

#include "addcomb/json_util.hpp"

namespace addcomb {

namespace {

constexpr std::uint64_t kCountCapacity = std::uint64_t{1} << 62;
constexpr std::uint64_t kDenseByteCap = std::uint64_t{1} << 31;
constexpr std::size_t kMaxArity = 64;

void check_arity(std::size_t k) {
  if (k < 1) throw UsageError("k must be >= 1");
  if (k > kMaxArity) throw UsageError("sum arity beyond supported bound 64");
}

void check_windows(std::span<const GroundSet> sets) {
  if (sets.empty()) throw UsageError("sumset of no sets");
  check_arity(sets.size());
  for (const auto& s : sets) {
    if (s.window() != sets.front().window()) throw UsageError("mixed windows in sumset");
  }
}

std::uint64_t checked_product(std::span<const GroundSet> sets) {
  unsigned __int128 prod = 1;
  for (const auto& s : sets) {
    prod *= s.size();
    if (prod > kCountCapacity)
      throw CapacityError("representation count capacity exceeded (product of sizes)");
  }
  return static_cast<std::uint64_t>(prod);
}

// Dense integer convolution, exact on [0, cap].
std::vector<std::uint64_t> convolve_counts(std::span<const GroundSet> sets, std::uint64_t cap) {
  std::vector<std::uint64_t> cur(std::min(sets.front().window(), cap) + 1, 0);
  if ((cap + 1) * 8 > kDenseByteCap) throw CapacityError("dense count buffer beyond capacity");
  for (std::uint64_t a : sets.front().elements()) {
    if (a <= cap) cur[a] = 1;
  }
  std::uint64_t reach = std::min(sets.front().window(), cap);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    reach = std::min(reach + sets[i].window(), cap);
    std::vector<std::uint64_t> next(reach + 1, 0);
    for (std::uint64_t a : sets[i].elements()) {
      if (a > reach) continue;
      const std::uint64_t limit = std::min<std::uint64_t>(cur.size(), reach - a + 1);
      std::uint64_t* out = next.data() + a;
      const std::uint64_t* in = cur.data();
      for (std::uint64_t x = 0; x < limit; ++x) out[x] += in[x];
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

GroundSet ksum(std::span<const GroundSet> sets) {
  check_windows(sets);
  const std::uint64_t w = sets.front().window();
  const std::uint64_t total = w * sets.size();
  if (total > kMaxWindow) throw CapacityError("sumset window beyond supported bound");
  DenseBits cur(w + 1);
  for (std::uint64_t a : sets.front().elements()) cur.set(a);
  std::uint64_t cur_width = w;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    cur_width += w;
    DenseBits next(cur_width + 1);
    for (std::uint64_t a : sets[i].elements()) next.or_shifted(cur, a);
    cur = std::move(next);
  }
  return GroundSet(cur.to_elements(), total);
}

GroundSet ksum(const GroundSet& a, std::size_t k) {
  check_arity(k);
  std::vector<GroundSet> sets(k, a);
  return ksum(std::span<const GroundSet>(sets));
}

RepProfile::RepProfile(std::size_t k, std::uint64_t window, std::vector<std::uint64_t> counts,
                       std::vector<std::uint64_t> source_sizes)
    : k_(k), window_(window), counts_(std::move(counts)), source_sizes_(std::move(source_sizes)) {}

std::uint64_t RepProfile::support_size() const {
  std::uint64_t n = 0;
  for (std::uint64_t c : counts_) n += (c > 0);
  return n;
}

std::uint64_t RepProfile::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts_) t += c;
  return t;
}

std::uint64_t RepProfile::max_count() const {
  std::uint64_t m = 0;
  for (std::uint64_t c : counts_) m = std::max(m, c);
  return m;
}

GroundSet RepProfile::support() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < counts_.size(); ++x) {
    if (counts_[x]) out.push_back(x);
  }
  return GroundSet(std::move(out), window_);
}

std::string RepProfile::to_csv() const {
  std::ostringstream os;
  os << "x,count\n";
  for (std::uint64_t x = 0; x < counts_.size(); ++x) {
    if (counts_[x]) os << x << "," << counts_[x] << "\n";
  }
  return os.str();
}

nlohmann::json RepProfile::to_json() const {
  nlohmann::json counts = nlohmann::json::object();
  for (std::uint64_t x = 0; x < counts_.size(); ++x) {
    if (counts_[x]) counts[std::to_string(x)] = json_u64(counts_[x]);
  }
  nlohmann::json sizes = nlohmann::json::array();
  for (std::uint64_t s : source_sizes_) sizes.push_back(s);
  return {{"k", k_},
          {"window", json_u64(window_)},
          {"counts", std::move(counts)},
          {"sourceSizes", std::move(sizes)}};
}

RepProfile rep_counts(std::span<const GroundSet> sets) {
  check_windows(sets);
  checked_product(sets);
  const std::uint64_t w = sets.front().window() * sets.size();
  std::vector<std::uint64_t> counts = convolve_counts(sets, w);
  counts.resize(w + 1, 0);
  std::vector<std::uint64_t> sizes;
  for (const auto& s : sets) sizes.push_back(s.size());
  return RepProfile(sets.size(), w, std::move(counts), std::move(sizes));
}

RepProfile rep_counts(const GroundSet& a, std::size_t k) {
  check_arity(k);
  std::vector<GroundSet> sets(k, a);
  return rep_counts(std::span<const GroundSet>(sets));
}

RepProfile rep_counts_clipped(const GroundSet& a, std::size_t k, std::uint64_t cap) {
  check_arity(k);
  std::vector<GroundSet> sets(k, a);
  std::span<const GroundSet> sp(sets);
  check_windows(sp);
  checked_product(sp);
  std::vector<std::uint64_t> counts = convolve_counts(sp, cap);
  counts.resize(cap + 1, 0);
  std::vector<std::uint64_t> sizes(k, a.size());
  return RepProfile(k, cap, std::move(counts), std::move(sizes));
}

GroundSet popular(const RepProfile& profile, std::uint64_t K) {
  if (K < 1) throw UsageError("popularity threshold must be >= 1");
  std::vector<std::uint64_t> out;
  const auto& counts = profile.counts();
  for (std::uint64_t x = 0; x < counts.size(); ++x) {
    if (counts[x] >= K) out.push_back(x);
  }
  return GroundSet(std::move(out), profile.window());
}

bool counting_check(const GroundSet& a, std::size_t k) {
  const RepProfile p = rep_counts(a, k);
  unsigned __int128 expect = 1;
  for (std::size_t i = 0; i < k; ++i) expect *= a.size();
  return p.total() == static_cast<std::uint64_t>(expect);
}

std::string TuplingProfile::to_csv() const {
  std::ostringstream os;
  os << "n,ratio\n";
  for (const auto& pt : points) {
    if (pt.empty_truncation)
      os << pt.n << ",\n";
    else
      os << pt.n << "," << pt.ratio << "\n";
  }
  return os.str();
}

nlohmann::json TuplingProfile::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : points) {
    pts.push_back({{"n", json_u64(pt.n)},
                   {"size", json_u64(pt.truncated_size)},
                   {"sumsetSize", json_u64(pt.sumset_size)},
                   {"ratio", pt.ratio},
                   {"empty", pt.empty_truncation}});
  }
  return {{"k", k},
          {"points", std::move(pts)},
          {"liminfEstimate", liminf_estimate},
          {"tailFraction", tail_fraction}};
}

TuplingProfile tupling_profile(const GroundSet& a, std::size_t k,
                               std::span<const std::uint64_t> grid, double tail_fraction) {
  if (grid.empty()) throw UsageError("empty grid");
  if (k < 2) throw UsageError("tupling arity must be >= 2");
  check_arity(k);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw UsageError("grid must be strictly increasing");
  }
  if (grid.back() > a.window()) throw WindowError("grid beyond window");
  if (truncate(a, grid.front()).empty())
    throw UsageError("empty truncation at the first grid point");

  TuplingProfile profile;
  profile.k = k;
  profile.tail_fraction = tail_fraction;
  for (std::uint64_t n : grid) {
    TuplingPoint pt;
    pt.n = n;
    const GroundSet an = truncate(a, n);
    pt.truncated_size = an.size();
    if (an.empty()) {
      pt.empty_truncation = true;
      profile.points.push_back(pt);
      continue;
    }
    pt.sumset_size = ksum(an, k).size();
    long double denom = 1;
    for (std::size_t i = 0; i < k; ++i) denom *= static_cast<long double>(pt.truncated_size);
    pt.ratio = static_cast<double>(static_cast<long double>(pt.sumset_size) / denom);
    profile.points.push_back(pt);
  }
  std::size_t usable = 0;
  for (const auto& pt : profile.points) usable += !pt.empty_truncation;
  std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(usable * tail_fraction));
  double liminf = 1.0;
  std::size_t seen = 0;
  for (auto it = profile.points.rbegin(); it != profile.points.rend() && seen < tail; ++it) {
    if (it->empty_truncation) continue;
    liminf = std::min(liminf, it->ratio);
    ++seen;
  }
  profile.liminf_estimate = liminf;
  return profile;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t window, std::size_t points) {
  std::vector<std::uint64_t> grid;
  for (std::size_t i = 0; i < points; ++i) {
    const std::size_t shift = points - 1 - i;
    std::uint64_t n = shift >= 64 ? 0 : window >> shift;
    n = std::max<std::uint64_t>(n, 1);
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

std::uint64_t growth_index(const GroundSet& a, std::size_t k, Rational epsilon, std::uint64_t m) {
  if (k < 2) throw UsageError("k must be >= 2");
  if (!epsilon.positive()) throw UsageError("epsilon must be positive");
  if (m > a.window()) throw WindowError("start point beyond window");
  const std::uint64_t base_size = truncate(a, m).size();
  if (base_size == 0) throw UsageError("A truncated at the start point is empty");

  // Inequality at n: |A_{<=k n}| <= (k + p/q) |A_{<=n}|, exactly:
  //   q |A_{<=k n}| <= (q k + p) |A_{<=n}|.
  const std::uint64_t p = epsilon.num, q = epsilon.den;
  using u128 = unsigned __int128;

  std::uint64_t n = m;
  for (std::uint64_t r = 0;; ++r) {
    // Ladder cap: once ((k+eps)/k)^r |A_{<=m}| > m the search must already
    // have succeeded at an earlier rung.
    u128 scaled = base_size;
    u128 denom = 1;
    bool over = false;
    for (std::uint64_t i = 0; i < r; ++i) {
      scaled *= (static_cast<u128>(q) * k + p);
      denom *= static_cast<u128>(q) * k;
      if (scaled > (static_cast<u128>(1) << 120)) {
        over = true;
        break;
      }
    }
    if (over || scaled > denom * (m + 1))
      throw UsageError("ladder cap reached without success; inputs violate the growth contract");

    if (n > a.window() / k)
      throw WindowError("growth search needs window >= " + std::to_string(n * k));
    const std::uint64_t size_n = truncate(a, n).size();
    const std::uint64_t size_kn = truncate(a, k * n).size();
    if (static_cast<u128>(q) * size_kn <= static_cast<u128>(q * k + p) * size_n) return n;
    n *= k;
  }
}

}  // namespace addcomb
