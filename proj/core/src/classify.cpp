// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/classify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "addcomb/gaps.hpp"
#include "addcomb/hypergraph.hpp"
#include "addcomb/json_util.hpp"
#include "addcomb/patterns.hpp"
#include "addcomb/sumset.hpp"

namespace addcomb {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::SyndeticOrderDefinable:
      return "SYNDETIC_ORDER_DEFINABLE";
    case Verdict::IpWitness:
      return "IP_WITNESS";
    case Verdict::LargeTuplingPattern:
      return "LARGE_TUPLING_PATTERN";
    case Verdict::ExistsInftyFailureEvidence:
      return "EXISTS_INFTY_FAILURE_EVIDENCE";
    case Verdict::Indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "SYNDETIC_ORDER_DEFINABLE") return Verdict::SyndeticOrderDefinable;
  if (s == "IP_WITNESS") return Verdict::IpWitness;
  if (s == "LARGE_TUPLING_PATTERN") return Verdict::LargeTuplingPattern;
  if (s == "EXISTS_INFTY_FAILURE_EVIDENCE") return Verdict::ExistsInftyFailureEvidence;
  if (s == "INDETERMINATE") return Verdict::Indeterminate;
  throw FileParseError("unknown verdict: " + s, 0);
}

Config Config::from_file(const std::string& path) {
  Config cfg;
  std::ifstream in(path);
  if (!in) throw FileParseError("cannot open config file: " + path, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw FileParseError("expected key=value", lineno);
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    cfg.apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void Config::apply_kv(const std::string& key, const std::string& value) {
  if (key == "margin")
    margin = std::stoull(value);
  else if (key == "ip_margin")
    ip_margin = std::stoull(value);
  else if (key == "growth_floor")
    growth_floor_override = std::stoull(value);
  else if (key == "grid")
    grid = value;
  else if (key == "k")
    k = std::stoull(value);
  else if (key == "t")
    t = std::stoull(value);
  else if (key == "K")
    K = std::stoull(value);
  else if (key == "C")
    c_const = Rational::parse(value);
  else if (key == "c_floor")
    c_floor = Rational::parse(value);
  else if (key == "tail_fraction")
    tail_fraction = Rational::parse(value);
  else if (key == "node_budget")
    node_budget = std::stoull(value);
  else if (key == "path_budget")
    path_budget = std::stoull(value);
  else if (key == "seed")
    seed = std::stoull(value);
  else if (key == "ip_depth")
    ip_depth = std::stoull(value);
  else if (key == "size_floor")
    size_floor = std::stoull(value);
  else
    throw UsageError("unknown config key: " + key);
}

std::vector<std::uint64_t> Config::make_grid(std::uint64_t window) const {
  if (grid.rfind("geo:", 0) == 0) {
    const std::size_t points = std::stoull(grid.substr(4));
    if (points == 0) throw UsageError("grid needs at least one point");
    return geometric_grid(window, points);
  }
  if (grid.rfind("list:", 0) == 0) {
    std::vector<std::uint64_t> out;
    std::istringstream is(grid.substr(5));
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoull(tok));
    if (out.empty()) throw UsageError("grid needs at least one point");
    return out;
  }
  throw UsageError("grid spec must be geo:N or list:a,b,c");
}

nlohmann::json Config::to_json() const {
  nlohmann::json j;
  j["margin"] = margin ? nlohmann::json(*margin) : nlohmann::json("auto");
  j["ipMargin"] = ip_margin ? nlohmann::json(*ip_margin) : nlohmann::json("auto");
  j["growthFloor"] =
      growth_floor_override ? nlohmann::json(*growth_floor_override) : nlohmann::json("auto");
  j["grid"] = grid;
  j["k"] = k;
  j["t"] = t;
  j["K"] = K ? nlohmann::json(*K) : nlohmann::json("derived");
  j["C"] = c_const.to_string();
  j["cFloor"] = c_floor.to_string();
  j["tailFraction"] = tail_fraction.to_string();
  j["nodeBudget"] = node_budget;
  j["pathBudget"] = path_budget;
  j["seed"] = seed;
  j["ipDepth"] = ip_depth;
  j["sizeFloor"] = size_floor;
  return j;
}

nlohmann::json ClassificationReport::to_json() const {
  return {{"schema", "addcomb/report-v1"},
          {"set", set_echo},
          {"config", config_echo},
          {"verdict", to_string(verdict)},
          {"evidence", evidence},
          {"diagnostics", diagnostics}};
}

namespace {

using nlohmann::json;

// Exact ordered representation count by direct enumeration; the recheck path
// deliberately avoids the convolution kernel.
std::uint64_t rep_count_direct(const GroundSet& a, std::size_t k, std::uint64_t x) {
  if (k == 1) return a.contains(x) ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint64_t e : a.elements()) {
    if (e > x) break;
    total += rep_count_direct(a, k - 1, x - e);
  }
  return total;
}

bool point_below_floor(const TuplingPoint& pt, std::size_t k, const Rational& floor_c) {
  // sumset/size^k < num/den  <=>  den*sumset < num*size^k
  unsigned __int128 lhs = static_cast<unsigned __int128>(floor_c.den) * pt.sumset_size;
  unsigned __int128 rhs = floor_c.num;
  for (std::size_t i = 0; i < k; ++i) rhs *= pt.truncated_size;
  return lhs < rhs;
}

std::vector<const TuplingPoint*> tail_points(const TuplingProfile& profile,
                                             const Rational& tail_fraction) {
  std::vector<const TuplingPoint*> usable;
  for (const auto& pt : profile.points) {
    if (!pt.empty_truncation) usable.push_back(&pt);
  }
  std::size_t tail = static_cast<std::size_t>(
      (static_cast<unsigned __int128>(usable.size()) * tail_fraction.num) / tail_fraction.den);
  tail = std::max<std::size_t>(tail, 1);
  tail = std::min(tail, usable.size());
  return {usable.end() - tail, usable.end()};
}

}  // namespace

ClassificationReport classify(const GroundSet& a, const SetSpec& spec, const Config& cfg) {
  if (a.size() <= cfg.size_floor)
    throw UsageError("set too small to classify (size floor " + std::to_string(cfg.size_floor) +
                     ")");
  if (cfg.k < 2) throw UsageError("k must be >= 2");
  const std::uint64_t w = a.window();
  const std::uint64_t margin = cfg.margin.value_or(growth_floor(w));
  const std::uint64_t ip_margin = cfg.ip_margin.value_or(w / 4);

  ClassificationReport report;
  report.set_echo = spec.to_json();
  json cfg_echo = cfg.to_json();
  cfg_echo["margin"] = margin;
  cfg_echo["ipMargin"] = ip_margin;
  cfg_echo["growthFloor"] = cfg.growth_floor_override.value_or(growth_floor(w));
  report.config_echo = cfg_echo;

  auto diag = [&](std::string line) { report.diagnostics.push_back(std::move(line)); };

  // Stage 1: syndetic bound. A certified bound makes the order definable
  // from finitely many translates.
  if (const auto g = syndetic_bound(a, margin, cfg.growth_floor_override)) {
    json evidence{{"kind", "syndetic"},
                  {"set", spec.to_json()},
                  {"margin", json_u64(margin)},
                  {"bound", json_u64(*g)},
                  {"F", {{"lo", 0}, {"hi", json_u64(*g - 1)}}},
                  {"m", 0}};
    diag("stage1: syndetic bound " + std::to_string(*g) + " certified (margin " +
         std::to_string(margin) + ")");
    report.verdict = Verdict::SyndeticOrderDefinable;
    report.evidence = std::move(evidence);
    return report;
  }
  diag("stage1: not syndetic at this window (no certifiable bound below the growth floor)");

  // Stage 2: the gap refinement recursion. The recursion only ever tests the
  // refinements it materializes; constructive failure advances the pipeline.
  IpBuildOptions opt;
  opt.margin = ip_margin;
  opt.growth_floor_override = cfg.growth_floor_override;
  opt.size_floor = cfg.size_floor;
  auto outcome = build_ip_witness(a, cfg.ip_depth, opt);
  if (auto* witness = std::get_if<IpWitness>(&outcome)) {
    const ShatterReport shatter = verify_shatter(*witness, a);
    if (shatter.ok) {
      json evidence{{"kind", "ip-witness"},
                    {"set", spec.to_json()},
                    {"margin", json_u64(ip_margin)},
                    {"depth", witness->depth()},
                    {"shatterChecks", json_u64(shatter.checks)},
                    {"witness", witness->to_json()}};
      diag("stage2: shattering witness of depth " + std::to_string(witness->depth()) +
           " verified (" + std::to_string(shatter.checks) + " checks)");
      report.verdict = Verdict::IpWitness;
      report.evidence = std::move(evidence);
      return report;
    }
    diag("stage2: witness construction succeeded but shatter verification failed");
  } else {
    const auto& failure = std::get<IpFailure>(outcome);
    diag("stage2: gap recursion failed at stage " + std::to_string(failure.stage) + " (" +
         std::string(to_string(failure.reason)) + "): " + failure.detail);
    diag("stage2: the recursion tests only the subsets it materializes; constructive "
         "failure licenses the growth branch");
  }

  // Stage 3: tupling growth, unpopular blocks and the depth-k pattern.
  // Grid points below the least element carry no information.
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n : cfg.make_grid(w)) {
    if (n >= a.min()) grid.push_back(n);
  }
  if (grid.empty()) grid.push_back(w);
  TuplingProfile profile =
      tupling_profile(a, cfg.k, grid, cfg.tail_fraction.to_double());
  const auto tail = tail_points(profile, cfg.tail_fraction);
  bool any_tail_below = false, all_tail_below = true;
  for (const auto* pt : tail) {
    const bool below = point_below_floor(*pt, cfg.k, cfg.c_floor);
    any_tail_below |= below;
    all_tail_below &= below;
  }
  diag("stage3: tupling liminf estimate " + std::to_string(profile.liminf_estimate) + " over " +
       std::to_string(tail.size()) + " tail points (floor " + cfg.c_floor.to_string() + ")");

  if (cfg.K || !any_tail_below) {
    std::uint64_t K;
    if (cfg.K) {
      K = *cfg.K;
    } else {
      // K = ceil(4 (k+1)^k / c) with c the exact minimum tail ratio.
      unsigned __int128 best_num = 0, best_den = 1;
      bool first = true;
      for (const auto* pt : tail) {
        unsigned __int128 den = 1;
        for (std::size_t i = 0; i < cfg.k; ++i) den *= pt->truncated_size;
        if (first || static_cast<unsigned __int128>(pt->sumset_size) * best_den <
                         best_num * den) {
          best_num = pt->sumset_size;
          best_den = den;
          first = false;
        }
      }
      unsigned __int128 coef = 4;
      for (std::size_t i = 0; i < cfg.k; ++i) coef *= (cfg.k + 1);
      K = static_cast<std::uint64_t>((coef * best_den + best_num - 1) / best_num);
    }
    std::vector<std::uint64_t> blocks_grid;
    for (std::uint64_t n : grid) {
      if (n <= w / cfg.k) blocks_grid.push_back(n);
    }
    if (!blocks_grid.empty()) {
      UnpopularResult blocks = unpopular_blocks(a, cfg.k, K, cfg.t, blocks_grid, cfg.c_const,
                                                cfg.node_budget);
      if (blocks.outcome == ExtractionOutcome::Found) {
        try {
          DepthkWitness witness = depthk_witness(*blocks.blocks, a, cfg.k, K);
          PatternReport bounded =
              verify_bounded_error(witness.pattern, K - 1, witness.domain_cap);
          if (bounded.ok) {
            json evidence{{"kind", "blocks-pattern"},
                          {"set", spec.to_json()},
                          {"n", json_u64(blocks.n)},
                          {"k", cfg.k},
                          {"K", json_u64(K)},
                          {"t", cfg.t},
                          {"C", cfg.c_const.to_string()},
                          {"B", blocks.blocks->to_json()},
                          {"edgeCount", json_u64(blocks.edge_count)},
                          {"threshold", json_u64(blocks.threshold)},
                          {"budgetUsed", json_u64(blocks.budget_used)},
                          {"measuredC", json_u64(witness.measured_c)},
                          {"pattern", pattern_certificate(witness.pattern, bounded)}};
            diag("stage3: blocks at n=" + std::to_string(blocks.n) + " (edges " +
                 std::to_string(blocks.edge_count) + " > threshold " +
                 std::to_string(blocks.threshold) + "), pattern bounded by C=" +
                 std::to_string(witness.measured_c));
            report.verdict = Verdict::LargeTuplingPattern;
            report.evidence = std::move(evidence);
            return report;
          }
          diag("stage3: bounded-error verification failed");
        } catch (const BlocksInvalidError& e) {
          diag(std::string("stage3: block validation failed: ") + e.what());
        }
      } else {
        diag(std::string("stage3: block extraction ") + to_string(blocks.outcome) + " across " +
             std::to_string(blocks.diagnostics.size()) + " grid points (K=" +
             std::to_string(K) + ")");
      }
    } else {
      diag("stage3: no grid point fits k*n within the window");
    }
  } else {
    diag("stage3: tupling profile below the floor; block extraction skipped");
  }

  // Stage 4: decay evidence — popular sums witness unboundedly large
  // definable fibers. Counts are taken over a truncation sized for the
  // counting kernel; a popular sum there is popular in A a fortiori.
  if (all_tail_below) {
    try {
      std::uint64_t n0 = grid.front();
      for (std::uint64_t n : grid) {
        if (truncate(a, n).size() <= 4000) n0 = n;
      }
      const GroundSet a0 = truncate(a, n0);
      const RepProfile rep = rep_counts(a0, cfg.k);
      const std::uint64_t max_rep = rep.max_count();
      json schedule = json::array();
      for (std::uint64_t K = 2; K <= a0.size(); K *= 2) {
        std::uint64_t found = 0;
        bool any = false;
        for (std::uint64_t x = 0; x < rep.counts().size(); ++x) {
          if (rep.counts()[x] >= K) {
            found = x;
            any = true;
            break;
          }
        }
        if (!any) break;
        schedule.push_back({{"K", json_u64(K)},
                            {"witness", json_u64(found)},
                            {"rep", json_u64(rep.count(found))}});
      }
      std::uint64_t m_reached = 0;
      while ((m_reached + 1) * (m_reached + 1) <= max_rep) ++m_reached;  // floor(maxRep^(1/2))
      if (cfg.k > 2) {
        m_reached = 0;
        while (true) {
          unsigned __int128 p = 1;
          for (std::size_t i = 0; i < cfg.k; ++i) p *= (m_reached + 1);
          if (p > max_rep) break;
          ++m_reached;
        }
      }
      json evidence{{"kind", "exists-infty"},
                    {"set", spec.to_json()},
                    {"k", cfg.k},
                    {"truncation", json_u64(n0)},
                    {"cFloor", cfg.c_floor.to_string()},
                    {"schedule", std::move(schedule)},
                    {"maxRep", json_u64(max_rep)},
                    {"fiberBound", json_u64(m_reached)}};
      diag("stage4: profile decays below the floor at every tail point; max r^k = " +
           std::to_string(max_rep) + " certifies definable fibers of size >= " +
           std::to_string(m_reached));
      report.verdict = Verdict::ExistsInftyFailureEvidence;
      report.evidence = std::move(evidence);
      return report;
    } catch (const Error& e) {
      diag(std::string("stage4: representation counting unavailable: ") + e.what());
    }
  }

  report.verdict = Verdict::Indeterminate;
  report.evidence = json{{"kind", "indeterminate"},
                         {"set", spec.to_json()},
                         {"notes", report.diagnostics}};
  return report;
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  if (s == "csv-summary") return ReportFormat::CsvSummary;
  throw UsageError("unknown report format: " + s);
}

namespace {

std::string one_line_detail(const ClassificationReport& r) {
  const json& e = r.evidence;
  switch (r.verdict) {
    case Verdict::SyndeticOrderDefinable:
      return "bound=" + e.at("bound").dump();
    case Verdict::IpWitness:
      return "depth=" + e.at("depth").dump();
    case Verdict::LargeTuplingPattern:
      return "n=" + e.at("n").dump() + " K=" + e.at("K").dump();
    case Verdict::ExistsInftyFailureEvidence:
      return "maxRep=" + e.at("maxRep").dump();
    case Verdict::Indeterminate:
      return "-";
  }
  return "-";
}

}  // namespace

std::string emit_report(const ClassificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return r.to_json().dump(2) + "\n";
    case ReportFormat::Text: {
      std::ostringstream os;
      os << "verdict: " << to_string(r.verdict) << "\n";
      os << "set: " << r.set_echo.at("kind").get<std::string>() << " (window "
         << r.set_echo.at("window").dump() << ")\n";
      os << "detail: " << one_line_detail(r) << "\n";
      os << "diagnostics:\n";
      for (const auto& d : r.diagnostics) os << "  - " << d << "\n";
      return os.str();
    }
    case ReportFormat::CsvSummary: {
      std::vector<ClassificationReport> one{r};
      return emit_batch_csv(one);
    }
  }
  throw UsageError("unknown report format");
}

std::string emit_batch_csv(const std::vector<ClassificationReport>& reports) {
  std::ostringstream os;
  os << "set,window,verdict,detail\n";
  for (const auto& r : reports) {
    os << r.set_echo.at("kind").get<std::string>() << "," << r.set_echo.at("window").dump() << ","
       << to_string(r.verdict) << "," << one_line_detail(r) << "\n";
  }
  return os.str();
}

namespace {

RecheckResult fail(std::string why) { return {false, std::move(why)}; }

RecheckResult recheck_syndetic(const json& cert) {
  const GroundSet a = generate(SetSpec::from_json(cert.at("set")));
  const std::uint64_t margin = u64_from_json(cert.at("margin"));
  const std::uint64_t g = u64_from_json(cert.at("bound"));
  if (g < 1) return fail("bound must be positive");
  const std::uint64_t region_end = a.window() - margin;
  // Coverage: every length-g interval in the region meets A.
  std::uint64_t prev = 0;
  bool started = false;
  for (std::uint64_t x : a.elements()) {
    if (x > region_end) break;
    const std::uint64_t run = started ? x - prev - 1 : x;
    if (run >= g) return fail("uncovered interval of length " + std::to_string(run));
    prev = x;
    started = true;
  }
  if (!started) return fail("no elements in the region");
  if (region_end > prev && region_end - prev >= g)
    return fail("uncovered tail interval");
  // Minimality: some length-(g-1) interval misses A.
  if (g >= 2) {
    const auto recomputed = syndetic_bound(a, margin);
    if (!recomputed || *recomputed != g)
      return fail("recomputed bound disagrees: " +
                  (recomputed ? std::to_string(*recomputed) : std::string("absent")));
  }
  return {true, "syndetic bound re-verified"};
}

RecheckResult recheck_ip(const json& cert) {
  const GroundSet a = generate(SetSpec::from_json(cert.at("set")));
  IpWitness w = IpWitness::from_json(cert.at("witness"));
  std::string why;
  if (!w.invariants_ok(&why)) return fail("witness invariants: " + why);
  if (!a.contains(w.base)) return fail("base is not an element");
  const ShatterReport shatter = verify_shatter(w, a);
  if (!shatter.ok) {
    std::ostringstream os;
    os << "shatter fails at mask " << shatter.counterexample->mask << ", gap index "
       << shatter.counterexample->m;
    return fail(os.str());
  }
  return {true, "shattering re-verified (" + std::to_string(shatter.checks) + " checks)"};
}

RecheckResult recheck_blocks(const json& cert) {
  const GroundSet a = generate(SetSpec::from_json(cert.at("set")));
  const std::uint64_t n = u64_from_json(cert.at("n"));
  const std::size_t k = cert.at("k").get<std::size_t>();
  const std::uint64_t K = u64_from_json(cert.at("K"));
  const std::size_t t = cert.at("t").get<std::size_t>();

  Blocks blocks;
  blocks.t = t;
  const GroundSet an = truncate(a, n);
  for (const auto& part : cert.at("B")) {
    std::vector<std::uint64_t> els;
    for (const auto& e : part) els.push_back(u64_from_json(e));
    if (els.size() != t) return fail("block size differs from t");
    GroundSet g(els, n);
    if (!g.is_subset_of(an)) return fail("block not inside the truncated set");
    blocks.parts.push_back(std::move(g));
  }
  if (blocks.parts.size() != k) return fail("block count differs from k");

  // Independent certification through the popularity route: the block sums
  // must avoid D^k_K entirely and land in the k-fold sumset.
  std::vector<GroundSet> parts = blocks.parts;
  const GroundSet block_sums = ksum(std::span<const GroundSet>(parts));
  const RepProfile pop = rep_counts_clipped(truncate(a, k * n), k, k * n);
  const GroundSet d_set = popular(pop, K);
  const GroundSet kan = ksum(an, k);
  for (std::uint64_t s : block_sums.elements()) {
    if (!kan.contains(s)) return fail("block sum outside the k-fold sumset");
    if (d_set.contains(s)) return fail("block sum " + std::to_string(s) + " is K-popular");
  }

  // Threshold and edge count re-derived from scratch.
  const SumHypergraph h = SumHypergraph::build_sum(a, n, k, K);
  if (h.edge_count() != u64_from_json(cert.at("edgeCount")))
    return fail("edge count mismatch");
  const Rational c_const = Rational::parse(cert.at("C").get<std::string>());
  const std::uint64_t threshold =
      t >= 2 ? kst_edge_threshold(t, k, h.part_size(0), c_const) : 0;
  if (threshold != u64_from_json(cert.at("threshold"))) return fail("threshold mismatch");
  if (!(h.edge_count() > threshold) && t >= 2) return fail("edge count not above threshold");

  // Pattern re-verified with C = K-1.
  const FinitePattern pattern = FinitePattern::from_json(cert.at("pattern"));
  const PatternReport rep = verify_bounded_error(pattern, K - 1, default_domain_cap(pattern));
  if (!rep.ok) return fail("bounded-error pattern verification failed");
  return {true, "blocks and pattern re-verified"};
}

RecheckResult recheck_exists(const json& cert) {
  const GroundSet full = generate(SetSpec::from_json(cert.at("set")));
  const GroundSet a = truncate(full, u64_from_json(cert.at("truncation")));
  const std::size_t k = cert.at("k").get<std::size_t>();
  for (const auto& entry : cert.at("schedule")) {
    const std::uint64_t K = u64_from_json(entry.at("K"));
    const std::uint64_t b = u64_from_json(entry.at("witness"));
    const std::uint64_t claimed = u64_from_json(entry.at("rep"));
    const std::uint64_t actual = rep_count_direct(a, k, b);
    if (actual != claimed)
      return fail("rep count of " + std::to_string(b) + " is " + std::to_string(actual) +
                  ", certificate claims " + std::to_string(claimed));
    if (actual < K) return fail("witness not K-popular");
  }
  return {true, "popularity witnesses re-verified"};
}

}  // namespace

RecheckResult recheck(const nlohmann::json& doc) {
  const json* cert = &doc;
  if (doc.contains("verdict")) cert = &doc.at("evidence");
  if (!cert->contains("kind")) return fail("certificate missing kind");
  const std::string kind = cert->at("kind").get<std::string>();
  try {
    if (kind == "syndetic") return recheck_syndetic(*cert);
    if (kind == "ip-witness") return recheck_ip(*cert);
    if (kind == "blocks-pattern") return recheck_blocks(*cert);
    if (kind == "exists-infty") return recheck_exists(*cert);
    if (kind == "indeterminate") return {true, "nothing to verify"};
  } catch (const Error& e) {
    return fail(std::string("recheck error: ") + e.what());
  }
  return fail("unknown certificate kind: " + kind);
}

RecheckResult recheck_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileParseError("cannot open certificate: " + path, 0);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FileParseError(std::string("certificate JSON: ") + e.what(), 0);
  }
  return recheck(doc);
}

}  // namespace addcomb
