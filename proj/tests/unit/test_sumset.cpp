// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <set>

#include "addcomb/set_spec.hpp"
#include "addcomb/sumset.hpp"

using namespace addcomb;

namespace {

// Exhaustive enumeration oracles, independent of both convolution kernels.
std::set<std::uint64_t> ksum_slow(const std::vector<GroundSet>& sets) {
  std::set<std::uint64_t> cur{0};
  for (const auto& s : sets) {
    std::set<std::uint64_t> next;
    for (std::uint64_t base : cur) {
      for (std::uint64_t a : s.elements()) next.insert(base + a);
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<std::uint64_t, std::uint64_t> rep_slow(const GroundSet& a, std::size_t k) {
  std::map<std::uint64_t, std::uint64_t> counts;
  if (k == 2) {
    for (std::uint64_t x : a.elements())
      for (std::uint64_t y : a.elements()) ++counts[x + y];
  } else if (k == 3) {
    for (std::uint64_t x : a.elements())
      for (std::uint64_t y : a.elements())
        for (std::uint64_t z : a.elements()) ++counts[x + y + z];
  }
  return counts;
}

}  // namespace

TEST_CASE("ksum matches its frozen examples") {
  GroundSet a({0, 1, 3}, 3);
  CHECK(ksum(a, 2).elements() == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 6});
  CHECK(ksum(a, 2).window() == 6);

  GroundSet zero({0}, 0);
  CHECK(ksum(zero, 5).elements() == std::vector<std::uint64_t>{0});

  // Sidon set: all 10 pairwise sums distinct.
  GroundSet sidon({1, 2, 5, 11}, 11);
  CHECK(ksum(sidon, 2).elements() ==
        std::vector<std::uint64_t>{2, 3, 4, 6, 7, 10, 12, 13, 16, 22});
}

TEST_CASE("ksum of a single set is the set") {
  GroundSet a = generate(SetSpec::parse("random:0.3:1", 500));
  CHECK(ksum(a, 1) == a);
}

TEST_CASE("ksum agrees with enumeration and is symmetric in its arguments") {
  GroundSet a = generate(SetSpec::parse("random:0.2:21", 300));
  GroundSet b = generate(SetSpec::parse("random:0.1:22", 300));
  GroundSet c = generate(SetSpec::parse("random:0.05:23", 300));
  std::vector<GroundSet> abc{a, b, c};
  std::vector<GroundSet> cba{c, b, a};
  std::vector<GroundSet> bac{b, a, c};
  const GroundSet s1 = ksum(std::span<const GroundSet>(abc));
  CHECK(s1 == ksum(std::span<const GroundSet>(cba)));
  CHECK(s1 == ksum(std::span<const GroundSet>(bac)));
  const auto oracle = ksum_slow(abc);
  CHECK(s1.size() == oracle.size());
  for (std::uint64_t x : s1.elements()) CHECK(oracle.count(x) == 1);
}

TEST_CASE("ksum refuses mixed windows") {
  std::vector<GroundSet> sets{GroundSet({1}, 10), GroundSet({1}, 11)};
  CHECK_THROWS_AS(ksum(std::span<const GroundSet>(sets)), UsageError);
}

TEST_CASE("representation counts match the frozen examples") {
  GroundSet a({0, 1, 3}, 3);
  const RepProfile p = rep_counts(a, 2);
  CHECK(p.count(0) == 1);
  CHECK(p.count(1) == 2);
  CHECK(p.count(2) == 1);
  CHECK(p.count(3) == 2);
  CHECK(p.count(4) == 2);
  CHECK(p.count(5) == 0);
  CHECK(p.count(6) == 1);

  const RepProfile single = rep_counts(GroundSet({0}, 0), 5);
  CHECK(single.count(0) == 1);
  CHECK(single.total() == 1);

  const RepProfile pair = rep_counts(GroundSet({0, 1}, 1), 2);
  CHECK(pair.count(0) == 1);
  CHECK(pair.count(1) == 2);
  CHECK(pair.count(2) == 1);
}

TEST_CASE("representation counts agree with brute enumeration") {
  for (std::uint64_t seed : {31u, 32u, 33u}) {
    GroundSet a = generate(SetSpec::parse("random:0.15:" + std::to_string(seed), 400));
    for (std::size_t k : {2u, 3u}) {
      const RepProfile p = rep_counts(a, k);
      const auto oracle = rep_slow(a, k);
      for (std::uint64_t x = 0; x <= p.window(); ++x) {
        const auto it = oracle.find(x);
        CHECK(p.count(x) == (it == oracle.end() ? 0 : it->second));
      }
    }
  }
}

TEST_CASE("the support of the counts is exactly the sumset") {
  for (std::uint64_t seed : {41u, 42u}) {
    GroundSet a = generate(SetSpec::parse("random:0.1:" + std::to_string(seed), 600));
    for (std::size_t k : {2u, 3u}) {
      CHECK(rep_counts(a, k).support() == ksum(a, k));
    }
  }
}

TEST_CASE("popularity thresholds slice the profile") {
  GroundSet a({0, 1, 3}, 3);
  const RepProfile p = rep_counts(a, 2);
  CHECK(popular(p, 2).elements() == std::vector<std::uint64_t>{1, 3, 4});
  CHECK(popular(p, 1) == ksum(a, 2));
  CHECK(popular(p, 100).empty());
  CHECK_THROWS_AS(popular(p, 0), UsageError);
}

TEST_CASE("counting identity holds exactly") {
  GroundSet a({0, 1, 3}, 3);
  CHECK(counting_check(a, 2));
  CHECK(counting_check(GroundSet({5}, 5), 3));
  for (std::uint64_t seed : {51u, 52u, 53u, 54u}) {
    GroundSet r = generate(SetSpec::parse("random:0.2:" + std::to_string(seed), 500));
    CHECK(counting_check(r, 2));
  }
}

TEST_CASE("overflow is detected, never wrapped") {
  std::vector<std::uint64_t> big;
  for (std::uint64_t i = 0; i < 1200; ++i) big.push_back(i);
  GroundSet a(big, 1200);
  CHECK_THROWS_AS(rep_counts(a, 7), CapacityError);  // 1200^7 > 2^62
}

TEST_CASE("Sidon certificate holds on the greedy sequence") {
  GroundSet mc = generate(SetSpec::parse("mian-chowla", 20000));
  const std::uint64_t m = mc.size();
  CHECK(ksum(mc, 2).size() == m * (m + 1) / 2);
  CHECK(rep_counts(mc, 2).max_count() <= 2);
}

TEST_CASE("tupling profile ratios follow the arithmetic") {
  // Full interval: ratio at n is (2n+1)/(n+1)^2.
  std::vector<std::uint64_t> all;
  for (std::uint64_t i = 0; i <= 512; ++i) all.push_back(i);
  GroundSet nat(all, 512);
  const std::vector<std::uint64_t> grid{8, 32, 128, 512};
  const TuplingProfile profile = tupling_profile(nat, 2, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::uint64_t n = grid[i];
    CHECK(profile.points[i].sumset_size == 2 * n + 1);
    CHECK(profile.points[i].truncated_size == n + 1);
    CHECK(profile.points[i].ratio ==
          doctest::Approx(static_cast<double>(2 * n + 1) / ((n + 1.0) * (n + 1.0))));
  }
  CHECK(profile.liminf_estimate <= profile.points.back().ratio + 1e-12);

  // Singleton: ratio 1 everywhere.
  GroundSet zero({0}, 0);
  const std::vector<std::uint64_t> g0{0};
  const TuplingProfile pz = tupling_profile(zero, 3, g0);
  CHECK(pz.points[0].ratio == 1.0);
}

TEST_CASE("tupling profile preconditions") {
  GroundSet a({5, 9}, 20);
  const std::vector<std::uint64_t> bad{1, 2};
  CHECK_THROWS_AS(tupling_profile(a, 2, bad), UsageError);  // empty first truncation
  const std::vector<std::uint64_t> beyond{5, 30};
  CHECK_THROWS_AS(tupling_profile(a, 2, beyond), WindowError);
}

TEST_CASE("growth index finds the first ladder rung") {
  std::vector<std::uint64_t> all;
  for (std::uint64_t i = 0; i <= 100; ++i) all.push_back(i);
  GroundSet nat(all, 100);
  CHECK(growth_index(nat, 2, Rational(1, 1), 10) == 10);

  GroundSet p2 = generate(SetSpec::parse("powers:2", 64));
  CHECK(growth_index(p2, 2, Rational(1, 2), 4) == 4);

  GroundSet sparse({50, 60}, 1000);
  CHECK_THROWS_AS(growth_index(sparse, 2, Rational(1, 1), 10), UsageError);
}

TEST_CASE("growth index output satisfies the inequality and earlier rungs fail") {
  for (const char* spec : {"primes", "squares", "mian-chowla", "subset-sums:3:7"}) {
    GroundSet a = generate(SetSpec::parse(spec, 20000));
    const std::uint64_t m = a.min() + 3;
    if (truncate(a, m).empty()) continue;
    const Rational eps(1, 3);
    const std::uint64_t n = growth_index(a, 2, eps, m);
    // q |A_{<=2n}| <= (2q+p) |A_{<=n}|
    auto holds = [&](std::uint64_t nn) {
      return eps.den * truncate(a, 2 * nn).size() <=
             (2 * eps.den + eps.num) * truncate(a, nn).size();
    };
    CHECK(holds(n));
    for (std::uint64_t r = m; r < n; r *= 2) CHECK_FALSE(holds(r));
  }
}

TEST_CASE("growth index names the required window when exhausted") {
  GroundSet a({1, 2, 4, 8, 16}, 16);
  try {
    growth_index(a, 2, Rational(1, 100), 9);  // first rung already needs 18
    FAIL("expected window error");
  } catch (const WindowError& e) {
    CHECK(std::string(e.what()).find("18") != std::string::npos);
  }
}

TEST_CASE("profiles export to CSV and JSON") {
  GroundSet a({0, 1, 3}, 4);
  const RepProfile p = rep_counts(a, 2);
  const std::string csv = p.to_csv();
  CHECK(csv.rfind("x,count\n", 0) == 0);
  CHECK(p.to_json().at("k") == 2);

  const std::vector<std::uint64_t> grid{1, 2, 4};
  const TuplingProfile tp = tupling_profile(a, 2, grid);
  CHECK(tp.to_csv().rfind("n,ratio\n", 0) == 0);
  CHECK(tp.to_json().at("points").size() == 3);
}
