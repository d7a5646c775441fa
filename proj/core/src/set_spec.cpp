// Copyright 2026 The addcomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "addcomb/set_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "addcomb/json_util.hpp"

namespace addcomb {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

GroundSet gen_primes(std::uint64_t w) {
  std::vector<bool> composite(w + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= w; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= w; m += p) composite[m] = true;
  }
  return GroundSet(std::move(out), w);
}

GroundSet gen_squares(std::uint64_t w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n * n <= w; ++n) out.push_back(n * n);
  return GroundSet(std::move(out), w);
}

GroundSet gen_powers(std::uint64_t q, std::uint64_t w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 1; v <= w; v *= q) {
    out.push_back(v);
    if (v > w / q) break;  // next multiply would overflow past w
  }
  return GroundSet(std::move(out), w);
}

GroundSet gen_polynomial(const std::vector<std::int64_t>& coeffs, std::uint64_t w) {
  using i128 = __int128;
  const std::size_t deg = coeffs.size() - 1;
  // All n with 0 <= p(n) <= w lie below the Cauchy root bound of p and of
  // p - w; beyond it the leading term dominates.
  std::uint64_t n_cap = 0;
  if (deg == 0) {
    n_cap = 0;
  } else {
    long double lead = std::abs(static_cast<long double>(coeffs[deg]));
    long double worst = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      long double c = std::abs(static_cast<long double>(coeffs[i]));
      if (i == 0) c += static_cast<long double>(w);
      worst = std::max(worst, c);
    }
    const long double bound = 1.0L + worst / lead;
    n_cap = bound > 1e15L ? std::uint64_t{1} << 50 : static_cast<std::uint64_t>(bound) + 1;
  }
  const i128 lo_clip = -static_cast<i128>(1) << 100;
  const i128 hi_clip = static_cast<i128>(1) << 100;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n <= n_cap; ++n) {
    i128 v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      v = v * static_cast<i128>(n) + coeffs[i];
      if (v > hi_clip) v = hi_clip;
      if (v < lo_clip) v = lo_clip;
    }
    if (v >= 0 && v <= static_cast<i128>(w)) out.push_back(static_cast<std::uint64_t>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return GroundSet(std::move(out), w);
}

// One mt19937_64 draw per candidate x = 0..W in order; keep x iff the top 53
// bits fall below floor(density * 2^53). Engine output is standardized, so
// this is reproducible across platforms (std distributions are not).
GroundSet gen_random(double density, std::uint64_t seed, std::uint64_t w) {
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(std::floor(density * 9007199254740992.0));  // 2^53
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x <= w; ++x) {
    if ((rng() >> 11) < threshold) out.push_back(x);
  }
  return GroundSet(std::move(out), w);
}

// Greedy Sidon: accept the smallest next element keeping all pairwise sums
// distinct, starting at 1. Equivalent difference form: c is accepted iff no
// c - a is an existing pairwise difference.
GroundSet gen_mian_chowla(std::uint64_t w) {
  std::vector<std::uint64_t> a;
  DenseBits diffs(w + 1);
  for (std::uint64_t c = 1; c <= w; ++c) {
    bool ok = true;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      if (diffs.test(c - *it)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::uint64_t prev : a) diffs.set(c - prev);
    a.push_back(c);
  }
  return GroundSet(std::move(a), w);
}

GroundSet gen_subset_sums(std::uint64_t q, std::uint64_t n, std::uint64_t w) {
  std::vector<std::uint64_t> sums{0};
  std::uint64_t power = 1;
  bool overflow = false;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (overflow) break;
    std::vector<std::uint64_t> next = sums;
    for (std::uint64_t s : sums) {
      const std::uint64_t v = s + power;
      if (v <= w) next.push_back(v);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
    if (power > w / q)
      overflow = true;  // q^{k+1} > w: no further power contributes
    else
      power *= q;
  }
  return GroundSet(std::move(sums), w);
}

}  // namespace

void SetSpec::validate() const {
  if (window > kMaxWindow) throw CapacityError("window beyond supported bound");
  switch (kind) {
    case Kind::Powers:
    case Kind::SubsetSums:
      if (q < 2) throw UsageError("base q must be >= 2");
      break;
    case Kind::Random:
      if (!(density > 0.0 && density <= 1.0)) throw UsageError("density must be in (0,1]");
      break;
    case Kind::Polynomial:
      if (coeffs.empty()) throw UsageError("polynomial needs coefficients");
      break;
    case Kind::File:
      if (path.empty()) throw UsageError("file spec needs a path");
      break;
    default:
      break;
  }
}

GroundSet generate(const SetSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case SetSpec::Kind::ExplicitList:
      return GroundSet(spec.elements, spec.window);
    case SetSpec::Kind::Primes:
      return gen_primes(spec.window);
    case SetSpec::Kind::Squares:
      return gen_squares(spec.window);
    case SetSpec::Kind::Powers:
      return gen_powers(spec.q, spec.window);
    case SetSpec::Kind::Polynomial:
      return gen_polynomial(spec.coeffs, spec.window);
    case SetSpec::Kind::Random:
      return gen_random(spec.density, spec.seed, spec.window);
    case SetSpec::Kind::MianChowla:
      return gen_mian_chowla(spec.window);
    case SetSpec::Kind::SubsetSums:
      return gen_subset_sums(spec.q, spec.depth, spec.window);
    case SetSpec::Kind::File: {
      GroundSet g = parse_set_file(spec.path);
      return g;
    }
  }
  throw UsageError("unknown set kind");
}

SetSpec SetSpec::parse(std::string_view text, std::uint64_t window) {
  SetSpec s;
  s.window = window;
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw UsageError("spec '" + std::string(text) + "' expects " + std::to_string(n) +
                       " argument(s)");
  };
  if (head == "primes") {
    need(0);
    s.kind = Kind::Primes;
  } else if (head == "squares") {
    need(0);
    s.kind = Kind::Squares;
  } else if (head == "mian-chowla") {
    need(0);
    s.kind = Kind::MianChowla;
  } else if (head == "powers") {
    need(1);
    s.kind = Kind::Powers;
    s.q = std::stoull(parts[1]);
  } else if (head == "polynomial") {
    need(1);
    s.kind = Kind::Polynomial;
    for (const auto& c : split(parts[1], ',')) s.coeffs.push_back(std::stoll(c));
  } else if (head == "random") {
    need(2);
    s.kind = Kind::Random;
    s.density = std::stod(parts[1]);
    s.seed = std::stoull(parts[2]);
  } else if (head == "subset-sums") {
    need(2);
    s.kind = Kind::SubsetSums;
    s.q = std::stoull(parts[1]);
    s.depth = std::stoull(parts[2]);
  } else if (head == "explicit") {
    need(1);
    s.kind = Kind::ExplicitList;
    for (const auto& e : split(parts[1], ',')) s.elements.push_back(std::stoull(e));
  } else if (head == "file") {
    need(1);
    s.kind = Kind::File;
    s.path = parts[1];
  } else {
    throw UsageError("unknown set kind '" + head + "'");
  }
  s.validate();
  return s;
}

std::string SetSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ExplicitList: {
      os << "explicit:";
      for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? "," : "") << elements[i];
      break;
    }
    case Kind::Primes:
      os << "primes";
      break;
    case Kind::Squares:
      os << "squares";
      break;
    case Kind::Powers:
      os << "powers:" << q;
      break;
    case Kind::Polynomial: {
      os << "polynomial:";
      for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
      break;
    }
    case Kind::Random:
      os << "random:" << density << ":" << seed;
      break;
    case Kind::MianChowla:
      os << "mian-chowla";
      break;
    case Kind::SubsetSums:
      os << "subset-sums:" << q << ":" << depth;
      break;
    case Kind::File:
      os << "file:" << path;
      break;
  }
  return os.str();
}

nlohmann::json SetSpec::to_json() const {
  nlohmann::json j;
  j["window"] = json_u64(window);
  switch (kind) {
    case Kind::ExplicitList: {
      j["kind"] = "explicit-list";
      nlohmann::json els = nlohmann::json::array();
      for (std::uint64_t e : elements) els.push_back(json_u64(e));
      j["elements"] = std::move(els);
      break;
    }
    case Kind::Primes:
      j["kind"] = "primes";
      break;
    case Kind::Squares:
      j["kind"] = "squares";
      break;
    case Kind::Powers:
      j["kind"] = "powers";
      j["q"] = q;
      break;
    case Kind::Polynomial:
      j["kind"] = "polynomial";
      j["coeffs"] = coeffs;
      break;
    case Kind::Random:
      j["kind"] = "random";
      j["density"] = density;
      j["seed"] = seed;
      break;
    case Kind::MianChowla:
      j["kind"] = "mian-chowla";
      break;
    case Kind::SubsetSums:
      j["kind"] = "subset-sums";
      j["q"] = q;
      j["depth"] = depth;
      break;
    case Kind::File:
      j["kind"] = "file";
      j["path"] = path;
      break;
  }
  return j;
}

SetSpec SetSpec::from_json(const nlohmann::json& j) {
  SetSpec s;
  s.window = u64_from_json(j.at("window"));
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit-list") {
    s.kind = Kind::ExplicitList;
    for (const auto& e : j.at("elements")) s.elements.push_back(u64_from_json(e));
  } else if (kind == "primes") {
    s.kind = Kind::Primes;
  } else if (kind == "squares") {
    s.kind = Kind::Squares;
  } else if (kind == "powers") {
    s.kind = Kind::Powers;
    s.q = j.at("q").get<std::uint64_t>();
  } else if (kind == "polynomial") {
    s.kind = Kind::Polynomial;
    s.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  } else if (kind == "random") {
    s.kind = Kind::Random;
    s.density = j.at("density").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
  } else if (kind == "mian-chowla") {
    s.kind = Kind::MianChowla;
  } else if (kind == "subset-sums") {
    s.kind = Kind::SubsetSums;
    s.q = j.at("q").get<std::uint64_t>();
    s.depth = j.at("depth").get<std::uint64_t>();
  } else if (kind == "file") {
    s.kind = Kind::File;
    s.path = j.at("path").get<std::string>();
  } else {
    throw FileParseError("unknown set kind in JSON: " + kind, 0);
  }
  s.validate();
  return s;
}

GroundSet parse_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileParseError("cannot open set file: " + path, 0);
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t declared_window = 0;
  std::vector<std::uint64_t> elements;
  std::vector<std::uint64_t> seen_sorted;  // duplicate detection without a window bound
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (lineno == 1 && line.compare(first, 7, "#window") == 0) {
        std::istringstream hs(line.substr(first + 7));
        if (!(hs >> declared_window))
          throw FileParseError("malformed #window header", lineno);
      }
      continue;
    }
    std::int64_t value = 0;
    std::istringstream ls(line.substr(first));
    std::string token;
    ls >> token;
    std::string rest;
    if (ls >> rest) throw FileParseError("trailing token '" + rest + "'", lineno);
    try {
      std::size_t used = 0;
      value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw FileParseError("non-integer token '" + token + "'", lineno);
    }
    if (value < 0) throw FileParseError("negative element " + std::to_string(value), lineno);
    const std::uint64_t v = static_cast<std::uint64_t>(value);
    if (std::binary_search(seen_sorted.begin(), seen_sorted.end(), v))
      throw FileParseError("duplicate element " + std::to_string(v), lineno);
    seen_sorted.insert(std::lower_bound(seen_sorted.begin(), seen_sorted.end(), v), v);
    elements.push_back(v);
  }
  const std::uint64_t max_el = elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end());
  return GroundSet(std::move(elements), std::max(declared_window, max_el));
}

void write_set_file(const GroundSet& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileParseError("cannot write set file: " + path, 0);
  out << "#window " << a.window() << "\n";
  for (std::uint64_t x : a.elements()) out << x << "\n";
}

}  // namespace addcomb
