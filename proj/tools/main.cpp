// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0
//
// addcomb — windowed additive-combinatorics toolkit.
//
// Subcommands:
//   analyze    classify sets and emit reports with certificates
//   generate   materialize a set spec into a set file
//   sumset     tupling growth profile as CSV
//   witness    build shattering / blocks-pattern certificates
//   verify     independently re-check a certificate (exit 0/1)
//   pattern    verify a serialized pattern (ict / inp / bounded)
//
// Exit codes: 0 success or verified, 1 verification failure, 2 usage error,
// 3 window or capacity error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "addcomb/classify.hpp"
#include "addcomb/gaps.hpp"
#include "addcomb/hypergraph.hpp"
#include "addcomb/json_util.hpp"
#include "addcomb/patterns.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/sumset.hpp"

namespace {

using addcomb::Config;
using addcomb::GroundSet;
using addcomb::SetSpec;
using nlohmann::json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw addcomb::FileParseError("cannot write output: " + out_path, 0);
  out << text;
}

struct LoadedSet {
  SetSpec spec;
  GroundSet set;
};

// File-loaded sets are echoed as explicit lists so certificates stay
// self-contained.
LoadedSet load_from_file(const std::string& path) {
  GroundSet g = addcomb::parse_set_file(path);
  SetSpec spec;
  spec.kind = SetSpec::Kind::ExplicitList;
  spec.window = g.window();
  spec.elements = g.elements();
  return {std::move(spec), std::move(g)};
}

LoadedSet load_from_spec(const std::string& text, std::optional<std::uint64_t> window) {
  if (!window) throw addcomb::UsageError("--gen requires --window");
  SetSpec spec = SetSpec::parse(text, *window);
  GroundSet g = addcomb::generate(spec);
  if (spec.kind == SetSpec::Kind::File) {
    SetSpec echo;
    echo.kind = SetSpec::Kind::ExplicitList;
    echo.window = g.window();
    echo.elements = g.elements();
    return {std::move(echo), std::move(g)};
  }
  return {std::move(spec), std::move(g)};
}

int run(int argc, char** argv) {
  CLI::App app{
      "addcomb — gap structure, sumset growth and pattern witnesses on finite integer sets"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (flags override)");

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "classify sets and emit reports");
  std::vector<std::string> an_files;
  std::string an_gen, an_format = "json", an_out;
  std::optional<std::uint64_t> an_window, an_k, an_K, an_seed;
  analyze->add_option("setfile", an_files, "set file(s)");
  analyze->add_option("--gen", an_gen, "set spec (e.g. mian-chowla, subset-sums:4:5)");
  analyze->add_option("--window,-w", an_window, "window for --gen");
  analyze->add_option("--k", an_k, "sum arity");
  analyze->add_option("--K", an_K, "explicit popularity threshold");
  analyze->add_option("--seed", an_seed, "seed echoed in the report");
  analyze->add_option("--format", an_format, "json | text | csv-summary");
  analyze->add_option("--out", an_out, "output path (default stdout)");

  // ---- generate ----
  auto* generate_cmd = app.add_subcommand("generate", "materialize a spec into a set file");
  std::string gen_spec, gen_out;
  std::uint64_t gen_window = 0;
  generate_cmd->add_option("--spec", gen_spec, "set spec")->required();
  generate_cmd->add_option("--window,-w", gen_window, "window")->required();
  generate_cmd->add_option("--out", gen_out, "output set file")->required();

  // ---- sumset ----
  auto* sumset_cmd = app.add_subcommand("sumset", "tupling growth profile (CSV)");
  std::string su_file, su_grid, su_out;
  std::uint64_t su_k = 2;
  sumset_cmd->add_option("setfile", su_file, "set file")->required();
  sumset_cmd->add_option("--k", su_k, "sum arity (default 2)");
  sumset_cmd->add_option("--profile", su_grid, "grid: geo:N or list:a,b,c");
  sumset_cmd->add_option("--out", su_out, "output path (default stdout)");

  // ---- witness ----
  auto* witness_cmd = app.add_subcommand("witness", "emit certificates");
  std::string wi_mode, wi_file, wi_out;
  std::optional<std::uint64_t> wi_depth, wi_margin, wi_K, wi_t, wi_k;
  witness_cmd->add_option("mode", wi_mode, "ip | depthk")->required();
  witness_cmd->add_option("setfile", wi_file, "set file")->required();
  witness_cmd->add_option("--depth", wi_depth, "recursion depth (ip; default 3)");
  witness_cmd->add_option("--margin", wi_margin, "interior margin (ip; default window/4)");
  witness_cmd->add_option("--k", wi_k, "sum arity (depthk; default 2)");
  witness_cmd->add_option("--K", wi_K, "popularity threshold (depthk; default derived)");
  witness_cmd->add_option("--t", wi_t, "block size (depthk; default 2)");
  witness_cmd->add_option("--out", wi_out, "output path (default stdout)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate");
  std::string ve_file;
  verify_cmd->add_option("certificate", ve_file, "certificate or report JSON")->required();

  // ---- pattern ----
  auto* pattern_cmd = app.add_subcommand("pattern", "pattern operations");
  pattern_cmd->require_subcommand(1);
  auto* pattern_verify = pattern_cmd->add_subcommand("verify", "verify a serialized pattern");
  std::string pv_file, pv_mode = "ict", pv_bounds;
  std::uint64_t pv_c = 0;
  std::optional<std::uint64_t> pv_cap;
  pattern_verify->add_option("pattern", pv_file, "pattern JSON file")->required();
  pattern_verify->add_option("--mode", pv_mode, "ict | inp | bounded");
  pattern_verify->add_option("--C", pv_c, "error budget for bounded mode");
  pattern_verify->add_option("--cap", pv_cap, "domain cap (default derived)");
  pattern_verify->add_option("--row-bounds", pv_bounds, "inp row bounds, e.g. 2,2");

  CLI11_PARSE(app, argc, argv);

  Config cfg;
  if (!config_path.empty()) cfg = Config::from_file(config_path);

  if (*analyze) {
    if (an_k) cfg.k = *an_k;
    if (an_K) cfg.K = *an_K;
    if (an_seed) cfg.seed = *an_seed;
    std::vector<LoadedSet> sets;
    if (!an_gen.empty()) sets.push_back(load_from_spec(an_gen, an_window));
    for (const auto& f : an_files) sets.push_back(load_from_file(f));
    if (sets.empty()) throw addcomb::UsageError("analyze needs a set file or --gen");
    std::vector<addcomb::ClassificationReport> reports;
    for (const auto& s : sets) reports.push_back(addcomb::classify(s.set, s.spec, cfg));
    const addcomb::ReportFormat format = addcomb::report_format_from_string(an_format);
    std::string out;
    if (format == addcomb::ReportFormat::CsvSummary) {
      out = addcomb::emit_batch_csv(reports);
    } else {
      for (const auto& r : reports) out += addcomb::emit_report(r, format);
    }
    write_output(out, an_out);
    return 0;
  }

  if (*generate_cmd) {
    const SetSpec spec = SetSpec::parse(gen_spec, gen_window);
    addcomb::write_set_file(addcomb::generate(spec), gen_out);
    return 0;
  }

  if (*sumset_cmd) {
    LoadedSet s = load_from_file(su_file);
    Config grid_cfg = cfg;
    if (!su_grid.empty()) grid_cfg.grid = su_grid;
    const auto grid = grid_cfg.make_grid(s.set.window());
    const auto profile =
        addcomb::tupling_profile(s.set, su_k, grid, cfg.tail_fraction.to_double());
    write_output(profile.to_csv(), su_out);
    return 0;
  }

  if (*witness_cmd) {
    LoadedSet s = load_from_file(wi_file);
    const std::uint64_t w = s.set.window();
    if (wi_mode == "ip") {
      addcomb::IpBuildOptions opt;
      opt.margin = wi_margin.value_or(w / 4);
      opt.growth_floor_override = cfg.growth_floor_override;
      opt.size_floor = cfg.size_floor;
      auto outcome = addcomb::build_ip_witness(s.set, wi_depth.value_or(cfg.ip_depth), opt);
      if (auto* witness = std::get_if<addcomb::IpWitness>(&outcome)) {
        const auto shatter = addcomb::verify_shatter(*witness, s.set);
        json cert{{"schema", "addcomb/certificate-v1"},
                  {"kind", "ip-witness"},
                  {"set", s.spec.to_json()},
                  {"margin", addcomb::json_u64(opt.margin)},
                  {"depth", witness->depth()},
                  {"shatterChecks", addcomb::json_u64(shatter.checks)},
                  {"witness", witness->to_json()}};
        write_output(cert.dump(2) + "\n", wi_out);
        return shatter.ok ? 0 : 1;
      }
      const auto& f = std::get<addcomb::IpFailure>(outcome);
      json report{{"schema", "addcomb/certificate-v1"},
                  {"kind", "ip-failure"},
                  {"set", s.spec.to_json()},
                  {"stage", f.stage},
                  {"reason", addcomb::to_string(f.reason)},
                  {"detail", f.detail}};
      write_output(report.dump(2) + "\n", wi_out);
      return 1;
    }
    if (wi_mode == "depthk") {
      const std::size_t k = static_cast<std::size_t>(wi_k.value_or(cfg.k));
      const std::size_t t = static_cast<std::size_t>(wi_t.value_or(cfg.t));
      const auto grid_all = cfg.make_grid(w);
      std::vector<std::uint64_t> grid;
      for (std::uint64_t n : grid_all) {
        if (n <= w / k) grid.push_back(n);
      }
      if (grid.empty()) throw addcomb::WindowError("window too small for k-fold analysis");
      std::uint64_t K;
      if (wi_K) {
        K = *wi_K;
      } else if (cfg.K) {
        K = *cfg.K;
      } else {
        const auto profile =
            addcomb::tupling_profile(s.set, k, grid, cfg.tail_fraction.to_double());
        const double c = profile.liminf_estimate;
        if (c <= 0) throw addcomb::UsageError("cannot derive K from a vanishing profile");
        double coef = 4;
        for (std::size_t i = 0; i < k; ++i) coef *= static_cast<double>(k + 1);
        K = static_cast<std::uint64_t>(coef / c) + 1;
      }
      const auto blocks =
          addcomb::unpopular_blocks(s.set, k, K, t, grid, cfg.c_const, cfg.node_budget);
      if (blocks.outcome != addcomb::ExtractionOutcome::Found) {
        json diags = json::array();
        for (const auto& d : blocks.diagnostics) {
          diags.push_back({{"n", addcomb::json_u64(d.n)},
                           {"partSize", addcomb::json_u64(d.part_size)},
                           {"edgeCount", addcomb::json_u64(d.edge_count)},
                           {"threshold", addcomb::json_u64(d.threshold)},
                           {"note", d.note}});
        }
        json report{{"schema", "addcomb/certificate-v1"},
                    {"kind", "blocks-failure"},
                    {"set", s.spec.to_json()},
                    {"outcome", addcomb::to_string(blocks.outcome)},
                    {"K", addcomb::json_u64(K)},
                    {"diagnostics", std::move(diags)}};
        write_output(report.dump(2) + "\n", wi_out);
        return 1;
      }
      const auto witness = addcomb::depthk_witness(*blocks.blocks, s.set, k, K);
      const auto bounded =
          addcomb::verify_bounded_error(witness.pattern, K - 1, witness.domain_cap);
      json cert{{"schema", "addcomb/certificate-v1"},
                {"kind", "blocks-pattern"},
                {"set", s.spec.to_json()},
                {"n", addcomb::json_u64(blocks.n)},
                {"k", k},
                {"K", addcomb::json_u64(K)},
                {"t", t},
                {"C", cfg.c_const.to_string()},
                {"B", blocks.blocks->to_json()},
                {"edgeCount", addcomb::json_u64(blocks.edge_count)},
                {"threshold", addcomb::json_u64(blocks.threshold)},
                {"budgetUsed", addcomb::json_u64(blocks.budget_used)},
                {"measuredC", addcomb::json_u64(witness.measured_c)},
                {"pattern", addcomb::pattern_certificate(witness.pattern, bounded)}};
      write_output(cert.dump(2) + "\n", wi_out);
      return bounded.ok ? 0 : 1;
    }
    throw addcomb::UsageError("witness mode must be ip or depthk");
  }

  if (*verify_cmd) {
    const auto result = addcomb::recheck_file(ve_file);
    std::cout << (result.ok ? "VERIFIED" : "REJECTED") << ": " << result.detail << "\n";
    return result.ok ? 0 : 1;
  }

  if (*pattern_verify) {
    std::ifstream in(pv_file);
    if (!in) throw addcomb::FileParseError("cannot open pattern: " + pv_file, 0);
    json doc;
    try {
      in >> doc;
    } catch (const json::parse_error& e) {
      throw addcomb::FileParseError(std::string("pattern JSON: ") + e.what(), 0);
    }
    const json& pj = doc.contains("pattern") ? doc.at("pattern") : doc;
    const auto pattern = addcomb::FinitePattern::from_json(pj);
    const std::uint64_t cap = pv_cap.value_or(addcomb::default_domain_cap(pattern));
    bool ok = false;
    if (pv_mode == "ict") {
      ok = addcomb::verify_ict(pattern, cap).ok;
    } else if (pv_mode == "bounded") {
      ok = addcomb::verify_bounded_error(pattern, pv_c, cap).ok;
    } else if (pv_mode == "inp") {
      std::vector<std::uint64_t> bounds;
      if (!pv_bounds.empty()) {
        std::istringstream is(pv_bounds);
        std::string tok;
        while (std::getline(is, tok, ',')) bounds.push_back(std::stoull(tok));
      } else {
        bounds.assign(pattern.depth(), 2);
      }
      ok = addcomb::verify_inp(pattern, bounds, cap, cfg.path_budget).ok;
    } else {
      throw addcomb::UsageError("pattern mode must be ict, inp or bounded");
    }
    std::cout << (ok ? "VERIFIED" : "REJECTED") << " (" << pv_mode << ", cap " << cap << ")\n";
    return ok ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const addcomb::WindowError& e) {
    std::cerr << "window error: " << e.what() << "\n";
    return 3;
  } catch (const addcomb::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const addcomb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
