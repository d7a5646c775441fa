// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "addcomb/ground_set.hpp"
#include "addcomb/rational.hpp"
#include "addcomb/set_spec.hpp"

namespace addcomb {

enum class Verdict {
  SyndeticOrderDefinable,
  IpWitness,
  LargeTuplingPattern,
  ExistsInftyFailureEvidence,
  Indeterminate,
};

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Resolved analysis configuration; echoed (with the seed) in every report.
struct Config {
  std::optional<std::uint64_t> margin;        // syndetic/gap scans; default growth_floor(W)
  std::optional<std::uint64_t> ip_margin;     // IP recursion margin; default W/4
  std::optional<std::uint64_t> growth_floor_override;
  std::string grid = "geo:12";                // "geo:N" or "list:a,b,c"
  std::size_t k = 2;
  std::size_t t = 2;
  std::optional<std::uint64_t> K;             // explicit popularity threshold; default derived
  Rational c_const{1, 1};                     // KST constant C(t,k)
  Rational c_floor{1, 20};                    // tupling-decay floor
  Rational tail_fraction{1, 2};
  std::uint64_t node_budget = 10'000'000;
  std::uint64_t path_budget = 1 << 20;
  std::uint64_t seed = 0;
  std::size_t ip_depth = 3;
  std::uint64_t size_floor = 4;

  /// key=value lines; '#' comments. Flags override file values.
  static Config from_file(const std::string& path);
  void apply_kv(const std::string& key, const std::string& value);

  std::vector<std::uint64_t> make_grid(std::uint64_t window) const;
  nlohmann::json to_json() const;
};

struct ClassificationReport {
  nlohmann::json set_echo;
  Verdict verdict = Verdict::Indeterminate;
  nlohmann::json evidence;        // verdict-specific machine-recheckable certificate
  std::vector<std::string> diagnostics;
  nlohmann::json config_echo;

  nlohmann::json to_json() const;
};

/// Runs the case analysis in fixed order: (1) syndetic bound — order is
/// definable from finitely many translates; (2) the gap recursion — a
/// shattering witness; (3) tupling profile, unpopular blocks and the depth-k
/// pattern; (4) tupling decay — evidence that definable fibers grow without
/// bound. Dead ends are Indeterminate with full diagnostics; the only
/// exceptions raised are precondition violations.
ClassificationReport classify(const GroundSet& a, const SetSpec& spec, const Config& cfg);

enum class ReportFormat { Json, Text, CsvSummary };
ReportFormat report_format_from_string(const std::string& s);

/// Deterministic serialization; JSON round-trips losslessly.
std::string emit_report(const ClassificationReport& r, ReportFormat format);
std::string emit_batch_csv(const std::vector<ClassificationReport>& reports);

struct RecheckResult {
  bool ok = false;
  std::string detail;
};

/// Independent re-validation of a serialized certificate (or of the
/// certificate embedded in a report). Regenerates the set from its embedded
/// spec and re-runs the verifying computation; never consults cached
/// verdicts.
RecheckResult recheck(const nlohmann::json& doc);
RecheckResult recheck_file(const std::string& path);

}  // namespace addcomb
