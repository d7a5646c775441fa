// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "addcomb/json_util.hpp"
#include "addcomb/sumset.hpp"

namespace addcomb {

const char* to_string(Predicate::Kind k) {
  switch (k) {
    case Predicate::Kind::TranslateMembership:
      return "translate-membership";
    case Predicate::Kind::DifferenceMembership:
      return "difference-membership";
    case Predicate::Kind::Congruence:
      return "congruence";
    case Predicate::Kind::ShiftedFormula:
      return "shifted-formula";
  }
  return "?";
}

namespace {
Predicate::Kind kind_from_string(const std::string& s) {
  if (s == "translate-membership") return Predicate::Kind::TranslateMembership;
  if (s == "difference-membership") return Predicate::Kind::DifferenceMembership;
  if (s == "congruence") return Predicate::Kind::Congruence;
  if (s == "shifted-formula") return Predicate::Kind::ShiftedFormula;
  throw FileParseError("unknown predicate kind: " + s, 0);
}
}  // namespace

bool Predicate::eval(std::uint64_t x) const {
  switch (kind) {
    case Kind::TranslateMembership:
    case Kind::ShiftedFormula:
      return set->contains_signed(static_cast<std::int64_t>(x) - param);
    case Kind::DifferenceMembership:
      return set->contains_signed(param - static_cast<std::int64_t>(x));
    case Kind::Congruence: {
      const std::uint64_t q = modulus;
      const std::uint64_t r = static_cast<std::uint64_t>(((param % static_cast<std::int64_t>(q)) +
                                                          static_cast<std::int64_t>(q)) %
                                                         static_cast<std::int64_t>(q));
      return x % q == r;
    }
  }
  return false;
}

Predicate Predicate::translate(std::shared_ptr<const GroundSet> s, std::string ref,
                               std::int64_t t) {
  return Predicate{Kind::TranslateMembership, std::move(s), std::move(ref), t, 0};
}
Predicate Predicate::difference(std::shared_ptr<const GroundSet> s, std::string ref,
                                std::int64_t y) {
  return Predicate{Kind::DifferenceMembership, std::move(s), std::move(ref), y, 0};
}
Predicate Predicate::congruence(std::uint64_t q, std::uint64_t r) {
  if (q == 0) throw UsageError("congruence with zero modulus");
  return Predicate{Kind::Congruence, nullptr, {}, static_cast<std::int64_t>(r), q};
}
Predicate Predicate::shifted(std::shared_ptr<const GroundSet> s, std::string ref, std::int64_t a) {
  return Predicate{Kind::ShiftedFormula, std::move(s), std::move(ref), a, 0};
}

FinitePattern::FinitePattern(std::vector<std::vector<Predicate>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw UsageError("pattern needs at least one row");
  for (const auto& r : rows_) {
    if (r.size() != rows_.front().size()) throw UsageError("pattern rows must be rectangular");
    if (r.empty()) throw UsageError("pattern rows must be nonempty");
  }
}

nlohmann::json FinitePattern::to_json() const {
  nlohmann::json rows_j = nlohmann::json::array();
  nlohmann::json sets_j = nlohmann::json::object();
  for (const auto& row : rows_) {
    nlohmann::json r;
    r["kind"] = to_string(row.front().kind);
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : row) params.push_back(p.param);
    r["params"] = std::move(params);
    if (row.front().kind == Predicate::Kind::Congruence) {
      r["modulus"] = row.front().modulus;
      r["setRef"] = nullptr;
    } else {
      r["setRef"] = row.front().set_ref;
      if (!sets_j.contains(row.front().set_ref))
        sets_j[row.front().set_ref] = row.front().set->to_json();
    }
    rows_j.push_back(std::move(r));
  }
  return {{"depth", depth()}, {"length", length()}, {"rows", std::move(rows_j)},
          {"sets", std::move(sets_j)}};
}

FinitePattern FinitePattern::from_json(const nlohmann::json& j) {
  std::map<std::string, std::shared_ptr<const GroundSet>> sets;
  if (j.contains("sets")) {
    for (const auto& [ref, sj] : j.at("sets").items())
      sets[ref] = std::make_shared<const GroundSet>(GroundSet::from_json(sj));
  }
  std::vector<std::vector<Predicate>> rows;
  for (const auto& rj : j.at("rows")) {
    const Predicate::Kind kind = kind_from_string(rj.at("kind").get<std::string>());
    std::vector<Predicate> row;
    for (const auto& pj : rj.at("params")) {
      const std::int64_t param = pj.get<std::int64_t>();
      if (kind == Predicate::Kind::Congruence) {
        row.push_back(Predicate::congruence(rj.at("modulus").get<std::uint64_t>(),
                                            static_cast<std::uint64_t>(param)));
      } else {
        const std::string ref = rj.at("setRef").get<std::string>();
        auto it = sets.find(ref);
        if (it == sets.end()) throw FileParseError("pattern references unknown set: " + ref, 0);
        Predicate p;
        p.kind = kind;
        p.set = it->second;
        p.set_ref = ref;
        p.param = param;
        row.push_back(std::move(p));
      }
    }
    rows.push_back(std::move(row));
  }
  return FinitePattern(std::move(rows));
}

std::uint64_t default_domain_cap(const FinitePattern& p) {
  std::uint64_t cap = 0;
  for (std::size_t alpha = 0; alpha < p.depth(); ++alpha) {
    for (const auto& pred : p.row(alpha)) {
      std::uint64_t reach = 0;
      switch (pred.kind) {
        case Predicate::Kind::TranslateMembership:
        case Predicate::Kind::ShiftedFormula:
          reach = pred.set->window() + static_cast<std::uint64_t>(std::max<std::int64_t>(0, pred.param));
          break;
        case Predicate::Kind::DifferenceMembership:
          reach = static_cast<std::uint64_t>(std::max<std::int64_t>(0, pred.param));
          break;
        case Predicate::Kind::Congruence:
          reach = pred.modulus;
          break;
      }
      cap = std::max(cap, reach);
    }
  }
  return cap;
}

namespace {

std::uint64_t path_count(std::size_t length, std::size_t depth, std::uint64_t clip) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    total *= length;
    if (total > clip) return clip + 1;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::uint32_t> decode_path(std::uint64_t idx, std::size_t depth, std::size_t length) {
  std::vector<std::uint32_t> eta(depth);
  for (std::size_t alpha = depth; alpha-- > 0;) {
    eta[alpha] = static_cast<std::uint32_t>(idx % length);
    idx /= length;
  }
  return eta;
}

}  // namespace

nlohmann::json pattern_certificate(const FinitePattern& p, const PatternReport& report) {
  nlohmann::json j = p.to_json();
  const nlohmann::json r = report.to_json(p);
  j["witnesses"] = r.at("witnesses");
  j["errors"] = r.at("errors");
  j["domainCap"] = r.at("domainCap");
  j["ok"] = r.at("ok");
  return j;
}

nlohmann::json PatternReport::to_json(const FinitePattern& p) const {
  nlohmann::json wit = nlohmann::json::object();
  for (const auto& [idx, a] : witnesses) {
    const auto eta = decode_path(idx, p.depth(), p.length());
    std::ostringstream key;
    for (std::size_t i = 0; i < eta.size(); ++i) key << (i ? "," : "") << eta[i];
    wit[key.str()] = json_u64(a);
  }
  nlohmann::json errs = nlohmann::json::object();
  for (std::size_t alpha = 0; alpha < row_errors.size(); ++alpha)
    errs[std::to_string(alpha)] = row_errors[alpha];
  nlohmann::json j{{"ok", ok}, {"domainCap", json_u64(domain_cap)},
                   {"witnesses", std::move(wit)}, {"errors", std::move(errs)}};
  if (first_failing_path) j["firstFailingPath"] = *first_failing_path;
  return j;
}

PatternReport verify_ict(const FinitePattern& p, std::uint64_t domain_cap) {
  const std::size_t depth = p.depth();
  const std::size_t length = p.length();
  PatternReport report;
  report.domain_cap = domain_cap;
  report.row_errors.assign(depth, 0);

  const std::uint64_t total = path_count(length, depth, std::uint64_t{1} << 32);
  if (total > (std::uint64_t{1} << 32)) throw CapacityError("too many paths to verify");

  // One pass over the domain: a point witnesses exactly one path when each
  // row fires in exactly one column.
  std::vector<std::uint32_t> sat(depth);
  for (std::uint64_t a = 0; a <= domain_cap; ++a) {
    bool clean = true;
    std::uint64_t idx = 0;
    for (std::size_t alpha = 0; alpha < depth && clean; ++alpha) {
      std::uint32_t col = 0;
      std::uint32_t hits = 0;
      const auto& row = p.row(alpha);
      for (std::size_t i = 0; i < length; ++i) {
        if (row[i].eval(a)) {
          ++hits;
          col = static_cast<std::uint32_t>(i);
          if (hits > 1) break;
        }
      }
      if (hits != 1) {
        clean = false;
        break;
      }
      sat[alpha] = col;
      idx = idx * length + col;
    }
    if (clean) report.witnesses.emplace(idx, a);
  }
  if (report.witnesses.size() == total) {
    report.ok = true;
  } else {
    report.ok = false;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (!report.witnesses.count(idx)) {
        report.first_failing_path = decode_path(idx, depth, length);
        break;
      }
    }
  }
  return report;
}

PatternReport verify_bounded_error(const FinitePattern& p, std::uint64_t C,
                                   std::uint64_t domain_cap) {
  const std::size_t depth = p.depth();
  const std::size_t length = p.length();
  PatternReport report;
  report.domain_cap = domain_cap;
  report.row_errors.assign(depth, 0);

  const std::uint64_t total = path_count(length, depth, std::uint64_t{1} << 24);
  if (total > (std::uint64_t{1} << 24)) throw CapacityError("too many paths to verify");

  report.ok = true;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto eta = decode_path(idx, depth, length);
    bool found = false;
    for (std::uint64_t a = 0; a <= domain_cap && !found; ++a) {
      bool good = true;
      std::vector<std::uint64_t> extras(depth, 0);
      for (std::size_t alpha = 0; alpha < depth && good; ++alpha) {
        const auto& row = p.row(alpha);
        if (!row[eta[alpha]].eval(a)) {
          good = false;
          break;
        }
        std::uint64_t extra = 0;
        for (std::size_t i = 0; i < length; ++i) {
          if (i != eta[alpha] && row[i].eval(a)) {
            if (++extra > C) {
              good = false;
              break;
            }
          }
        }
        extras[alpha] = extra;
      }
      if (good) {
        found = true;
        report.witnesses.emplace(idx, a);
        for (std::size_t alpha = 0; alpha < depth; ++alpha)
          report.row_errors[alpha] = std::max(report.row_errors[alpha], extras[alpha]);
      }
    }
    if (!found) {
      report.ok = false;
      report.first_failing_path = eta;
      return report;
    }
  }
  return report;
}

InpReport verify_inp(const FinitePattern& p, std::span<const std::uint64_t> row_bounds,
                     std::uint64_t domain_cap, std::uint64_t path_budget) {
  if (row_bounds.size() != p.depth()) throw UsageError("one inconsistency bound per row");
  const std::size_t depth = p.depth();
  const std::size_t length = p.length();
  InpReport report;

  // (a) Row inconsistency: no point may satisfy k_alpha cells of row alpha.
  report.rows_ok = true;
  for (std::size_t alpha = 0; alpha < depth && report.rows_ok; ++alpha) {
    if (row_bounds[alpha] < 2) throw UsageError("inconsistency bounds must be >= 2");
    for (std::uint64_t a = 0; a <= domain_cap; ++a) {
      std::uint64_t hits = 0;
      for (std::size_t i = 0; i < length; ++i) {
        if (p.row(alpha)[i].eval(a)) ++hits;
      }
      if (hits >= row_bounds[alpha]) {
        report.rows_ok = false;
        report.bad_row = alpha;
        report.bad_row_witness = a;
        break;
      }
    }
  }

  // (b) Path consistency; sampled deterministically beyond the budget.
  const std::uint64_t total = path_count(length, depth, std::uint64_t{1} << 62);
  report.sampled = total > path_budget;
  report.paths_ok = true;
  std::uint64_t stride = 1;
  std::uint64_t to_check = total;
  if (report.sampled) {
    stride = total / path_budget + 1;
    to_check = path_budget;
  }
  std::uint64_t idx = 0;
  for (std::uint64_t step = 0; step < to_check && idx < total; ++step, idx += stride) {
    const auto eta = decode_path(idx, depth, length);
    bool found = false;
    for (std::uint64_t a = 0; a <= domain_cap; ++a) {
      bool all = true;
      for (std::size_t alpha = 0; alpha < depth; ++alpha) {
        if (!p.row(alpha)[eta[alpha]].eval(a)) {
          all = false;
          break;
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    ++report.paths_checked;
    if (!found) {
      report.paths_ok = false;
      report.failing_path = eta;
      break;
    }
  }
  report.ok = report.rows_ok && report.paths_ok;
  return report;
}

std::variant<Depth2Witness, PatternFailure> depth2_witness(const GroundSet& a,
                                                           const GroundSet& phi_set,
                                                           std::size_t n) {
  if (n < 1) throw UsageError("pattern length must be >= 1");
  if (a.empty() || phi_set.empty()) throw UsageError("empty input set");

  struct Clustering {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clusters;  // [first, last]
    std::uint64_t threshold = 0;
  };

  // Candidate split thresholds: the distinct inter-element gaps, largest
  // first ("no split" handles n = 1). The first clustering with at least n
  // clusters whose separations dominate twice the widths wins.
  const auto& els = a.elements();
  std::vector<std::uint64_t> gaps;
  for (std::size_t i = 1; i < els.size(); ++i) gaps.push_back(els[i] - els[i - 1]);
  std::vector<std::uint64_t> thresholds = gaps;
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::optional<Clustering> chosen;
  auto try_threshold = [&](std::uint64_t g) -> std::optional<Clustering> {
    Clustering c;
    c.threshold = g;
    std::uint64_t first = els.front();
    std::uint64_t last = els.front();
    std::uint64_t min_sep = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 1; i < els.size(); ++i) {
      const std::uint64_t gap = els[i] - els[i - 1];
      if (g > 0 && gap >= g) {
        c.clusters.emplace_back(first, last);
        min_sep = std::min(min_sep, gap);
        first = els[i];
      }
      last = els[i];
    }
    c.clusters.emplace_back(first, last);
    if (c.clusters.size() < n) return std::nullopt;
    std::uint64_t max_width = 0;
    for (std::size_t i = 0; i < n; ++i)
      max_width = std::max(max_width, c.clusters[i].second - c.clusters[i].first);
    if (c.clusters.size() > 1 && min_sep <= 2 * max_width + 1) return std::nullopt;
    return c;
  };
  if (n == 1) chosen = try_threshold(0);  // the whole set as one cluster
  for (std::size_t gi = 0; gi < thresholds.size() && !chosen; ++gi)
    chosen = try_threshold(thresholds[gi]);
  if (!chosen)
    return PatternFailure{"no " + std::to_string(n) +
                          " isolated clusters (separation must exceed twice the widths)"};

  std::vector<std::uint64_t> leaders, widths;
  for (std::size_t i = 0; i < n; ++i) {
    leaders.push_back(chosen->clusters[i].first);
    widths.push_back(chosen->clusters[i].second - chosen->clusters[i].first);
  }
  const std::uint64_t m_bound = *std::max_element(widths.begin(), widths.end()) + 1;

  // Translates from phi, spaced at least M apart, greedily from the start.
  std::vector<std::uint64_t> rs;
  for (std::uint64_t r : phi_set.elements()) {
    if (rs.empty() || r >= rs.back() + m_bound) rs.push_back(r);
    if (rs.size() == n) break;
  }
  if (rs.size() < n)
    return PatternFailure{"phi set exhausted: needed " + std::to_string(n) +
                          " translates spaced " + std::to_string(m_bound) + " apart"};

  auto a_shared = std::make_shared<const GroundSet>(a);
  auto phi_shared = std::make_shared<const GroundSet>(phi_set);
  std::vector<Predicate> row0, row1;
  for (std::uint64_t r : rs)
    row0.push_back(Predicate::translate(a_shared, "A", static_cast<std::int64_t>(r)));
  for (std::uint64_t leader : leaders)
    row1.push_back(Predicate::shifted(phi_shared, "phi", static_cast<std::int64_t>(leader)));
  FinitePattern pattern({row0, row1});

  Depth2Witness out;
  out.leaders = leaders;
  out.translates = rs;
  out.m_bound = m_bound;
  out.cluster_gap = chosen->threshold;
  out.domain_cap = default_domain_cap(pattern);

  // Mechanical re-check of the disjointness argument: each witness must hit
  // exactly its designated cells. Interference is a failure, not a pattern.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t w = rs[i] + leaders[j];
      for (std::size_t col = 0; col < n; ++col) {
        if (pattern.row(0)[col].eval(w) != (col == i))
          return PatternFailure{"witness (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") interferes with translate column " +
                                std::to_string(col + 1)};
        if (pattern.row(1)[col].eval(w) != (col == j))
          return PatternFailure{"witness (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") interferes with phi column " +
                                std::to_string(col + 1)};
      }
      out.witnesses[{i, j}] = w;
    }
  }
  out.pattern = std::move(pattern);
  return out;
}

DepthkWitness depthk_witness(const Blocks& blocks, const GroundSet& a, std::size_t k,
                             std::uint64_t K) {
  if (k < 2) throw UsageError("depth-k witness needs k >= 2");
  if (blocks.parts.size() != k) throw UsageError("blocks arity mismatch");
  for (const auto& part : blocks.parts) {
    if (part.size() != blocks.t) throw UsageError("blocks must have t vertices per part");
    if (!part.is_subset_of(a)) throw UsageError("blocks must come from the ground set");
  }

  // (k-1)-fold sumset backing the row formula x - b ∈ (k-1)·A.
  std::shared_ptr<const GroundSet> rest;
  std::string rest_ref;
  if (k == 2) {
    rest = std::make_shared<const GroundSet>(a);
    rest_ref = "A";
  } else {
    rest = std::make_shared<const GroundSet>(ksum(a, k - 1));
    rest_ref = std::to_string(k - 1) + "A";
  }

  std::vector<std::vector<Predicate>> rows;
  for (std::size_t alpha = 0; alpha < k; ++alpha) {
    std::vector<Predicate> row;
    for (std::uint64_t b : blocks.parts[alpha].elements())
      row.push_back(Predicate::shifted(rest, rest_ref, static_cast<std::int64_t>(b)));
    rows.push_back(std::move(row));
  }
  FinitePattern pattern(std::move(rows));

  // Exact representation count of x as an ordered k-sum from A, by direct
  // enumeration (independent of the convolution kernel).
  std::function<std::uint64_t(std::size_t, std::uint64_t)> rcount =
      [&](std::size_t arity, std::uint64_t x) -> std::uint64_t {
    if (arity == 1) return a.contains(x) ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t e : a.elements()) {
      if (e > x) break;
      total += rcount(arity - 1, x - e);
    }
    return total;
  };

  DepthkWitness out;
  const std::size_t t = blocks.t;
  const std::uint64_t paths = path_count(t, k, std::uint64_t{1} << 24);
  if (paths > (std::uint64_t{1} << 24)) throw CapacityError("too many block paths");
  std::uint64_t c_meas = 0;
  for (std::uint64_t idx = 0; idx < paths; ++idx) {
    const auto eta = decode_path(idx, k, t);
    std::uint64_t a_eta = 0;
    for (std::size_t alpha = 0; alpha < k; ++alpha)
      a_eta += blocks.parts[alpha].elements()[eta[alpha]];
    const std::uint64_t reps = rcount(k, a_eta);
    if (reps >= K)
      throw BlocksInvalidError("witness sum " + std::to_string(a_eta) +
                                   " is K-popular (r^k = " + std::to_string(reps) + " >= " +
                                   std::to_string(K) + ")",
                               a_eta);
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
      const auto& row = pattern.row(alpha);
      if (!row[eta[alpha]].eval(a_eta))
        throw UsageError("designated cell fails; blocks exceed the window");
      std::uint64_t extra = 0;
      for (std::size_t i = 0; i < t; ++i) {
        if (i != eta[alpha] && row[i].eval(a_eta)) ++extra;
      }
      c_meas = std::max(c_meas, extra);
    }
    out.witnesses[idx] = a_eta;
  }
  out.measured_c = c_meas;
  out.domain_cap = default_domain_cap(pattern);
  out.pattern = std::move(pattern);
  return out;
}

}  // namespace addcomb
