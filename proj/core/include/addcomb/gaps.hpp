// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "addcomb/ground_set.hpp"

namespace addcomb {

/// Value of a left-gap query: a natural, the INFINITE marker (query point at
/// or below min A), or the empty-sup sentinel (a supremum over no points).
struct GapValue {
  enum class Kind { Finite, Infinite, EmptySup };
  Kind kind = Kind::Finite;
  std::uint64_t value = 0;

  static GapValue finite(std::uint64_t v) { return {Kind::Finite, v}; }
  static GapValue infinite() { return {Kind::Infinite, 0}; }
  static GapValue empty_sup() { return {Kind::EmptySup, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_empty_sup() const { return kind == Kind::EmptySup; }
  bool operator==(const GapValue&) const = default;
};

/// Length of the empty run of A immediately to the left of y: the largest m
/// with [y-m, y-1] ∩ A = ∅. INFINITE iff y <= min A. Requires 0 <= y <=
/// window and A nonempty.
GapValue left_gap(const GroundSet& a, std::uint64_t y);

/// sup{ left_gap(a, y) : y ∈ b, y > min a }; the empty-sup sentinel when no
/// such y exists. Requires b.window <= a.window and a nonempty.
GapValue left_gap_sup(const GroundSet& a, const GroundSet& b);

/// Threshold separating structured left-gap growth from boundary noise at a
/// given window: floor(log2 W).
std::uint64_t growth_floor(std::uint64_t window);

/// Least g such that every length-g interval inside [0, W-margin] meets A;
/// with F = [0, g-1] this witnesses syndeticity over the window. Absent —
/// "not syndetic at this window" — when only a boundary-adjacent gap
/// realizes the maximum (the bound cannot be certified) or when the largest
/// gap reaches the growth floor, which is this module's proxy for unbounded
/// left-gap growth, the negation of syndeticity.
std::optional<std::uint64_t> syndetic_bound(const GroundSet& a, std::uint64_t margin,
                                            std::optional<std::uint64_t> floor_override = {});

/// Least N such that every x ∈ A ∩ [margin, W-margin] has another element of
/// A within distance N. Absent when the interior is empty or some interior
/// point's nearest in-window neighbour is farther than margin allows
/// certifying (a closer one could hide beyond the window).
std::optional<std::uint64_t> two_sided_gap_bound(const GroundSet& a, std::uint64_t margin);

/// One refinement step of the gap recursion:
///   { y ∈ A' : [y-2d, y-1] ∩ A = ∅  and  [y+1, y+d] ∩ A' = {y+d} }.
/// Requires A' ⊆ A (shared window) and d >= 1.
GroundSet refine_step(const GroundSet& a, const GroundSet& a_prime, std::uint64_t d);

/// Shattering witness: base b, gap sequence d_0 < ... < d_N, the refinement
/// chain A_0 ⊇ ... ⊇ A_{N+1}, and the family b_s = b + Σ_{k∈s} d_k indexed
/// by submask.
struct IpWitness {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> gap_seq;       // d_0 .. d_N
  std::vector<GroundSet> chain;             // A_0 .. A_{N+1}; may be empty for hand-built witnesses
  std::vector<std::uint64_t> family;        // family[mask] = b_s, 2^(N+1) entries

  std::size_t depth() const { return gap_seq.empty() ? 0 : gap_seq.size() - 1; }

  /// d_n > 2 d_{n-1}, d_n > Σ_{k<n} d_k, family consistency, and (when the
  /// chain is present) inclusion-decreasing chain with base in the last set.
  bool invariants_ok(std::string* why = nullptr) const;

  /// { base, gapSeq[], chainSizes[], family: { "<submask>": b_s } }.
  nlohmann::json to_json() const;
  static IpWitness from_json(const nlohmann::json& j);
};

enum class IpFailureReason { NoGapBound, AllRefinementsDie, WindowExhausted };

/// Stage failure is data, not an exception: the classifier branches on it.
struct IpFailure {
  std::size_t stage = 0;
  IpFailureReason reason = IpFailureReason::NoGapBound;
  std::string detail;
};

const char* to_string(IpFailureReason r);

struct IpBuildOptions {
  std::uint64_t margin = 0;
  std::optional<std::uint64_t> growth_floor_override;
  std::uint64_t size_floor = 4;
};

/// Runs the refinement recursion to the requested depth. At stage n the
/// two-sided gap bound of A_n over the margin-trimmed interior caps the
/// d-scan; the first d whose refinement keeps interior left-gap growth
/// (left_gap_sup >= growth floor, the windowed stand-in for an unbounded
/// left gap) becomes d_n. The final stage only needs a nonempty refinement:
/// growth is a continuation criterion, and both the super-increasing gap
/// property and the shatter property follow from nonemptiness alone.
/// Requires depth >= 1 and |A| above the size floor.
std::variant<IpWitness, IpFailure> build_ip_witness(const GroundSet& a, std::size_t depth,
                                                    const IpBuildOptions& opt);

struct ShatterCounterexample {
  std::uint64_t mask = 0;    // the subset s
  std::size_t m = 0;         // the gap index probed
  bool expected_member = false;
};

struct ShatterReport {
  bool ok = false;
  std::uint64_t checks = 0;
  std::optional<ShatterCounterexample> counterexample;
};

/// Checks (b_s - d_m ∈ A) ⟺ (m ∈ s) for every submask s and m <= N.
/// Negative differences are non-members (A ⊆ N); a b_s beyond the window is
/// a WindowError since membership there is unobservable.
ShatterReport verify_shatter(const IpWitness& w, const GroundSet& a);

}  // namespace addcomb
