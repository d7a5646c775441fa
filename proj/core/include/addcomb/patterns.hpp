// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "addcomb/ground_set.hpp"
#include "addcomb/hypergraph.hpp"

namespace addcomb {

/// One cell of a pattern: a unary predicate over [0, domain cap] with its
/// parameter baked in. A closed enumeration of four shapes — every
/// construction the verifiers consume falls in one of them; there is
/// deliberately no general formula language.
struct Predicate {
  enum class Kind {
    TranslateMembership,   // x ∈ S + t          (param = t)
    DifferenceMembership,  // y - x ∈ S          (param = y)
    Congruence,            // x ≡ r (mod q)      (param = r, modulus = q)
    ShiftedFormula,        // x - a ∈ S          (param = a)
  };

  Kind kind = Kind::TranslateMembership;
  std::shared_ptr<const GroundSet> set;  // null for Congruence
  std::string set_ref;                   // name used in certificates
  std::int64_t param = 0;
  std::uint64_t modulus = 0;

  /// Total and pure over the domain; membership outside [0, S.window] is
  /// false (the sets are subsets of N observed through their window).
  bool eval(std::uint64_t x) const;

  static Predicate translate(std::shared_ptr<const GroundSet> s, std::string ref, std::int64_t t);
  static Predicate difference(std::shared_ptr<const GroundSet> s, std::string ref, std::int64_t y);
  static Predicate congruence(std::uint64_t q, std::uint64_t r);
  static Predicate shifted(std::shared_ptr<const GroundSet> s, std::string ref, std::int64_t a);
};

const char* to_string(Predicate::Kind k);

/// Rectangular array of predicates: depth rows, length columns. Rows share a
/// shape (one formula, per-column parameters), which is what the certificate
/// serialization records.
class FinitePattern {
 public:
  FinitePattern() = default;
  explicit FinitePattern(std::vector<std::vector<Predicate>> rows);

  std::size_t depth() const { return rows_.size(); }
  std::size_t length() const { return rows_.empty() ? 0 : rows_.front().size(); }
  const std::vector<Predicate>& row(std::size_t alpha) const { return rows_[alpha]; }

  /// { depth, length, rows: [{kind, params, setRef}], sets: {ref: set} }.
  nlohmann::json to_json() const;
  static FinitePattern from_json(const nlohmann::json& j);

 private:
  std::vector<std::vector<Predicate>> rows_;
};

struct PatternReport {
  bool ok = false;
  std::uint64_t domain_cap = 0;
  /// Witness per path, keyed by the mixed-radix index of η (row-major,
  /// η(0) most significant).
  std::map<std::uint64_t, std::uint64_t> witnesses;
  std::optional<std::vector<std::uint32_t>> first_failing_path;
  /// Per-row maximal extra hits over the reported witnesses.
  std::vector<std::uint64_t> row_errors;

  nlohmann::json to_json(const FinitePattern& p) const;
};

/// Shattering check: for every η there must be a ∈ [0, cap] satisfying
/// exactly the designated cell in each row and no other cell. Exhaustive
/// over the cap.
PatternReport verify_ict(const FinitePattern& p, std::uint64_t domain_cap);

/// Relaxation: the designated cell must hold and at most C other cells per
/// row may fire. C = 0 degenerates to verify_ict.
PatternReport verify_bounded_error(const FinitePattern& p, std::uint64_t C,
                                   std::uint64_t domain_cap);

struct InpReport {
  bool ok = false;
  bool rows_ok = false;
  std::optional<std::size_t> bad_row;        // row whose k_α-inconsistency fails
  std::optional<std::uint64_t> bad_row_witness;
  bool paths_ok = false;
  std::optional<std::vector<std::uint32_t>> failing_path;
  bool sampled = false;                      // true when paths were sampled
  std::uint64_t paths_checked = 0;
};

/// Independent-partition check: every row α must be k_α-inconsistent over
/// [0, cap] (no point satisfies k_α of its cells) and every path must have a
/// common solution. Paths beyond the budget are sampled deterministically
/// and the report says so.
InpReport verify_inp(const FinitePattern& p, std::span<const std::uint64_t> row_bounds,
                     std::uint64_t domain_cap, std::uint64_t path_budget = 1 << 20);

/// Depth-2 construction from cluster structure: picks n isolated clusters of
/// A (leaders a_j, widths < M), then translates r_1 < ... < r_n from phi_set
/// spaced at least M apart, and emits the two-row pattern
///   { x ∈ A + r_i },  { x - a_j ∈ phi_set }
/// with witness (i,j) ↦ r_i + a_j. Every emitted witness is re-checked to
/// satisfy exactly its designated cells; interference is a structured
/// failure, not a bad pattern.
struct Depth2Witness {
  FinitePattern pattern;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> witnesses;  // (i,j) -> r_i + a_j
  std::vector<std::uint64_t> leaders;     // a_1..a_n
  std::vector<std::uint64_t> translates;  // r_1..r_n
  std::uint64_t m_bound = 0;              // M = max cluster width + 1
  std::uint64_t cluster_gap = 0;          // split threshold actually used
  std::uint64_t domain_cap = 0;
};

struct PatternFailure {
  std::string reason;
};

std::variant<Depth2Witness, PatternFailure> depth2_witness(const GroundSet& a,
                                                           const GroundSet& phi_set,
                                                           std::size_t n);

/// Depth-k construction from certified blocks: row α has columns indexed by
/// B_α with cells x - b ∈ (k-1)·A, and witness a_η = b_{1,η(1)}+...+b_{k,η(k)}.
/// Measures the maximal per-row extra hits C_meas and asserts C_meas < K;
/// corrupt blocks (a K-popular witness sum) raise BlocksInvalidError naming
/// the sum.
struct DepthkWitness {
  FinitePattern pattern;
  std::map<std::uint64_t, std::uint64_t> witnesses;  // path index -> a_η
  std::uint64_t measured_c = 0;
  std::uint64_t domain_cap = 0;
};

DepthkWitness depthk_witness(const Blocks& blocks, const GroundSet& a, std::size_t k,
                             std::uint64_t K);

/// Default quantification cap: largest referenced window plus the largest
/// positive translate, so every construction's witnesses stay in range.
std::uint64_t default_domain_cap(const FinitePattern& p);

/// Self-contained pattern certificate:
/// { depth, length, rows: [{kind, params, setRef}], sets, witnesses
///   (η-tuple -> a), errors (row -> max extra hits), domainCap, ok }.
nlohmann::json pattern_certificate(const FinitePattern& p, const PatternReport& report);

}  // namespace addcomb
