// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/gaps.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "addcomb/json_util.hpp"

namespace addcomb {

GapValue left_gap(const GroundSet& a, std::uint64_t y) {
  if (a.empty()) throw UsageError("left gap of empty set is undefined");
  if (y > a.window())
    throw WindowError("left gap queried at " + std::to_string(y) + " beyond window");
  if (y <= a.min()) return GapValue::infinite();
  const std::uint64_t p = *a.pred_below(y);  // exists since y > min
  return GapValue::finite(y - p - 1);
}

GapValue left_gap_sup(const GroundSet& a, const GroundSet& b) {
  if (a.empty()) throw UsageError("left gap of empty set is undefined");
  if (b.window() > a.window())
    throw WindowError("query set window exceeds base set window");
  const std::uint64_t lo = a.min();
  std::uint64_t best = 0;
  bool any = false;
  for (std::uint64_t y : b.elements()) {
    if (y <= lo) continue;
    const GapValue g = left_gap(a, y);
    best = std::max(best, g.value);
    any = true;
  }
  return any ? GapValue::finite(best) : GapValue::empty_sup();
}

std::uint64_t growth_floor(std::uint64_t window) {
  return window == 0 ? 0 : static_cast<std::uint64_t>(std::bit_width(window) - 1);
}

std::optional<std::uint64_t> syndetic_bound(const GroundSet& a, std::uint64_t margin,
                                            std::optional<std::uint64_t> floor_override) {
  if (margin >= a.window() && a.window() > 0)
    throw UsageError("margin must be below the window");
  const std::uint64_t region_end = a.window() - margin;
  const std::uint64_t floor_val = floor_override.value_or(growth_floor(a.window()));

  // Walk the maximal empty runs in [0, region_end]. The bound g = longest
  // run + 1 is certified only by a run that recurs away from the right edge:
  // if every maximum-length run ends within one position of the region end
  // (or of the last element seen), a longer gap could continue past the
  // window and the honest answer is "not syndetic at this window".
  std::uint64_t last_in_region = 0;
  bool any_element = false;
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) {
    if (*it <= region_end) {
      last_in_region = *it;
      any_element = true;
      break;
    }
  }
  if (!any_element) return std::nullopt;
  const std::uint64_t touch_line =
      (std::min(region_end, last_in_region) == 0) ? 0 : std::min(region_end, last_in_region) - 1;

  std::uint64_t longest = 0;
  bool longest_interior = false;
  std::uint64_t cursor = 0;  // next unexamined position
  auto account_run = [&](std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) return;
    const std::uint64_t len = hi - lo + 1;
    const bool touches = hi >= touch_line;
    if (len > longest) {
      longest = len;
      longest_interior = !touches;
    } else if (len == longest && !touches) {
      longest_interior = true;
    }
  };
  for (std::uint64_t x : a.elements()) {
    if (x > region_end) break;
    if (x > cursor) account_run(cursor, x - 1);
    cursor = x + 1;
  }
  if (cursor <= region_end) account_run(cursor, region_end);

  if (longest == 0) return 1;           // A covers the whole region
  if (!longest_interior) return std::nullopt;
  if (floor_val > 0 && longest >= floor_val) return std::nullopt;  // gap growth, not syndetic
  return longest + 1;
}

std::optional<std::uint64_t> two_sided_gap_bound(const GroundSet& a, std::uint64_t margin) {
  if (a.empty()) throw UsageError("gap bound of empty set");
  if (a.window() < 2 * margin) return std::nullopt;
  const std::uint64_t lo = margin;
  const std::uint64_t hi = a.window() - margin;
  std::uint64_t worst = 0;
  bool any = false;
  const auto& els = a.elements();
  auto first = std::lower_bound(els.begin(), els.end(), lo);
  for (auto it = first; it != els.end() && *it <= hi; ++it) {
    std::uint64_t nearest = std::numeric_limits<std::uint64_t>::max();
    if (it != els.begin()) nearest = *it - *std::prev(it);
    if (std::next(it) != els.end()) nearest = std::min(nearest, *std::next(it) - *it);
    if (nearest == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;  // lone point
    worst = std::max(worst, nearest);
    any = true;
  }
  if (!any) return std::nullopt;
  if (worst > margin) return std::nullopt;  // a closer neighbour could hide beyond the window
  return worst;
}

GroundSet refine_step(const GroundSet& a, const GroundSet& a_prime, std::uint64_t d) {
  if (d < 1) throw UsageError("refinement distance must be >= 1");
  if (a_prime.window() != a.window())
    throw WindowError("refine_step requires a shared window");
  if (!a_prime.is_subset_of(a)) throw UsageError("refinement input is not a subset");
  std::vector<std::uint64_t> out;
  for (std::uint64_t y : a_prime.elements()) {
    const std::int64_t ylo = static_cast<std::int64_t>(y) - 2 * static_cast<std::int64_t>(d);
    if (a.range_has_element(ylo, static_cast<std::int64_t>(y) - 1)) continue;
    if (y + d > a_prime.window()) continue;  // y+d unobservable, clause cannot hold
    if (!a_prime.contains(y + d)) continue;
    if (d > 1 && a_prime.range_has_element(static_cast<std::int64_t>(y) + 1,
                                           static_cast<std::int64_t>(y + d) - 1))
      continue;
    out.push_back(y);
  }
  return GroundSet(std::move(out), a_prime.window());
}

const char* to_string(IpFailureReason r) {
  switch (r) {
    case IpFailureReason::NoGapBound:
      return "no-gap-bound";
    case IpFailureReason::AllRefinementsDie:
      return "all-refinements-die";
    case IpFailureReason::WindowExhausted:
      return "window-exhausted";
  }
  return "?";
}

bool IpWitness::invariants_ok(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (gap_seq.empty()) return fail("empty gap sequence");
  std::uint64_t running = 0;
  for (std::size_t n = 0; n < gap_seq.size(); ++n) {
    if (gap_seq[n] == 0) return fail("zero gap");
    if (n >= 1 && gap_seq[n] <= 2 * gap_seq[n - 1])
      return fail("gap " + std::to_string(n) + " not greater than twice its predecessor");
    if (n >= 1 && gap_seq[n] <= running)
      return fail("gap " + std::to_string(n) + " not greater than the sum of its predecessors");
    running += gap_seq[n];
  }
  const std::size_t nplus1 = gap_seq.size();
  if (family.size() != (std::size_t{1} << nplus1)) return fail("family size mismatch");
  for (std::uint64_t mask = 0; mask < family.size(); ++mask) {
    std::uint64_t expect = base;
    for (std::size_t k = 0; k < nplus1; ++k) {
      if (mask & (std::uint64_t{1} << k)) expect += gap_seq[k];
    }
    if (family[mask] != expect)
      return fail("family entry " + std::to_string(mask) + " inconsistent");
  }
  if (!chain.empty()) {
    if (chain.size() != nplus1 + 1) return fail("chain length mismatch");
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!chain[i].is_subset_of(chain[i - 1])) return fail("chain not decreasing");
    }
    if (!chain.back().contains(base)) return fail("base not in final chain set");
  }
  return true;
}

nlohmann::json IpWitness::to_json() const {
  nlohmann::json gaps_j = nlohmann::json::array();
  for (std::uint64_t d : gap_seq) gaps_j.push_back(json_u64(d));
  nlohmann::json sizes_j = nlohmann::json::array();
  for (const auto& c : chain) sizes_j.push_back(c.size());
  nlohmann::json fam_j = nlohmann::json::object();
  for (std::uint64_t mask = 0; mask < family.size(); ++mask)
    fam_j[std::to_string(mask)] = json_u64(family[mask]);
  return {{"base", json_u64(base)},
          {"gapSeq", std::move(gaps_j)},
          {"chainSizes", std::move(sizes_j)},
          {"family", std::move(fam_j)}};
}

IpWitness IpWitness::from_json(const nlohmann::json& j) {
  IpWitness w;
  w.base = u64_from_json(j.at("base"));
  for (const auto& d : j.at("gapSeq")) w.gap_seq.push_back(u64_from_json(d));
  w.family.assign(std::size_t{1} << w.gap_seq.size(), 0);
  for (const auto& [key, val] : j.at("family").items()) {
    const std::uint64_t mask = std::stoull(key);
    if (mask >= w.family.size()) throw FileParseError("family mask out of range: " + key, 0);
    w.family[mask] = u64_from_json(val);
  }
  return w;
}

std::variant<IpWitness, IpFailure> build_ip_witness(const GroundSet& a, std::size_t depth,
                                                    const IpBuildOptions& opt) {
  if (depth < 1) throw UsageError("witness depth must be >= 1");
  if (a.size() <= opt.size_floor)
    throw UsageError("set too small for gap analysis (size floor " +
                     std::to_string(opt.size_floor) + ")");
  const std::uint64_t floor_val =
      opt.growth_floor_override.value_or(growth_floor(a.window()));
  const std::uint64_t w = a.window();
  const std::uint64_t interior_end = w > opt.margin ? w - opt.margin : 0;

  std::vector<GroundSet> chain;
  chain.push_back(a);
  std::vector<std::uint64_t> gap_seq;

  for (std::size_t stage = 0; stage <= depth; ++stage) {
    const GroundSet& current = chain.back();
    const auto bound = two_sided_gap_bound(current, opt.margin);
    if (!bound) {
      return IpFailure{stage, IpFailureReason::NoGapBound,
                       "stage " + std::to_string(stage) +
                           ": no certified two-sided gap bound within margin " +
                           std::to_string(opt.margin)};
    }
    const bool final_stage = (stage == depth);
    std::optional<std::uint64_t> chosen;
    GroundSet refined;
    for (std::uint64_t d = 1; d <= *bound; ++d) {
      GroundSet b = refine_step(a, current, d);
      if (b.empty()) continue;
      if (final_stage) {
        // Growth is only needed to keep refining; a nonempty final
        // refinement already forces the super-increasing gaps and the
        // shatter property.
        chosen = d;
        refined = std::move(b);
        break;
      }
      const GapValue g = left_gap_sup(a, truncate(b, std::min(interior_end, b.window())));
      if (g.is_finite() && g.value >= floor_val) {
        chosen = d;
        refined = std::move(b);
        break;
      }
    }
    if (!chosen) {
      return IpFailure{stage, IpFailureReason::AllRefinementsDie,
                       "stage " + std::to_string(stage) + ": no d in [1," +
                           std::to_string(*bound) +
                           "] keeps interior left-gap growth >= " + std::to_string(floor_val)};
    }
    gap_seq.push_back(*chosen);
    chain.push_back(std::move(refined));
  }

  // Base: smallest element of the final set whose whole family stays inside
  // the window.
  std::uint64_t span = 0;
  for (std::uint64_t d : gap_seq) span += d;
  std::optional<std::uint64_t> base;
  for (std::uint64_t b : chain.back().elements()) {
    if (b + span <= w) {
      base = b;
      break;
    }
  }
  if (!base) {
    return IpFailure{depth, IpFailureReason::WindowExhausted,
                     "no base element keeps the family within window " + std::to_string(w)};
  }

  IpWitness witness;
  witness.base = *base;
  witness.gap_seq = std::move(gap_seq);
  witness.chain = std::move(chain);
  witness.family.assign(std::size_t{1} << witness.gap_seq.size(), 0);
  for (std::uint64_t mask = 0; mask < witness.family.size(); ++mask) {
    std::uint64_t v = witness.base;
    for (std::size_t k = 0; k < witness.gap_seq.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) v += witness.gap_seq[k];
    }
    witness.family[mask] = v;
  }
  return witness;
}

ShatterReport verify_shatter(const IpWitness& w, const GroundSet& a) {
  ShatterReport report;
  const std::size_t rows = w.gap_seq.size();
  if (rows == 0) throw UsageError("witness without gaps");
  if (w.family.size() != (std::size_t{1} << rows)) throw UsageError("family size mismatch");
  for (std::uint64_t b_s : w.family) {
    if (b_s > a.window())
      throw WindowError("family element " + std::to_string(b_s) + " beyond window");
  }
  for (std::uint64_t mask = 0; mask < w.family.size(); ++mask) {
    for (std::size_t m = 0; m < rows; ++m) {
      const bool expected = (mask >> m) & 1;
      const std::int64_t probe =
          static_cast<std::int64_t>(w.family[mask]) - static_cast<std::int64_t>(w.gap_seq[m]);
      const bool member = a.contains_signed(probe);
      ++report.checks;
      if (member != expected) {
        report.ok = false;
        report.counterexample = ShatterCounterexample{mask, m, expected};
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

}  // namespace addcomb
