#pragma once

// Seeded random search over orbit configurations. Each trial draws its representatives from
// a stream keyed by (seed, trial, group), so results do not depend on scheduling; records
// are emitted in trial order.

#include <atomic>
#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <limits>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratsurf/liftcheck.hpp"
#include "ratsurf/surface.hpp"

namespace ratsurf {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MultGroup {
  unsigned mult;
  std::vector<int> orbit_sizes;
};

struct SearchConfig {
  int a = 0;
  std::vector<MultGroup> groups;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool lift = false;
  bool timings = false;
  GbOptions gb;
  std::optional<SurfaceConfig> replay;  // fixed configuration used for every trial

  void validate() const {
    if (a < 1) throw ConfigError("degree a must be positive");
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (threads < 1) throw ConfigError("threads must be at least 1");
    if (!replay) {
      if (groups.empty()) throw ConfigError("no multiplicity groups given");
      for (const auto& g : groups) {
        if (g.mult < 1) throw ConfigError("multiplicities must be positive");
        if (g.orbit_sizes.empty()) throw ConfigError("group without orbits");
        for (int n : g.orbit_sizes) {
          if (n < 1 || n > 63) throw ConfigError("orbit sizes must lie in 1..63");
        }
      }
    }
  }
};

/// Parses "j:count[,j:count...]", one orbit of size count per entry.
inline std::vector<MultGroup> parse_mults(const std::string& text) {
  std::vector<MultGroup> out;
  if (!text.empty() && text.back() == ',') throw ConfigError("trailing ',' in multiplicity list");
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("expected j:count in '" + item + "'");
    try {
      std::size_t used = 0;
      const int j = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw ConfigError("bad multiplicity in '" + item + "'");
      const std::string rest = item.substr(colon + 1);
      const int c = std::stoi(rest, &used);
      if (used != rest.size()) throw ConfigError("bad count in '" + item + "'");
      if (j < 1 || c < 1) throw ConfigError("multiplicity and count must be positive in '" + item + "'");
      out.push_back({static_cast<unsigned>(j), {c}});
    } catch (const std::logic_error&) {
      throw ConfigError("expected j:count in '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty multiplicity list");
  return out;
}

/// {"a": 4, "groups": [{"mult": 2, "orbits": [1]}, {"mult": 1, "orbits": [7]}],
///  "trials": 200, "seed": 1}
inline SearchConfig search_config_from_json(const nlohmann::json& j) {
  SearchConfig c;
  try {
    c.a = j.at("a").get<int>();
    for (const auto& g : j.at("groups")) {
      MultGroup mg{g.at("mult").get<unsigned>(), g.at("orbits").get<std::vector<int>>()};
      c.groups.push_back(std::move(mg));
    }
    if (j.contains("trials")) c.trials = j.at("trials").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("search config: ") + e.what());
  }
  return c;
}

/// Point configuration file: {"a": 9, "points": [{"n": 14, "coords": [...], "mult": 2,
/// "orbit": 14}, ...]}; "orbit" defaults to n.
inline SurfaceConfig surface_config_from_json(const nlohmann::json& j) {
  SurfaceConfig c;
  try {
    c.a = j.at("a").get<int>();
    if (c.a < 1) throw ConfigError("degree a must be positive");
    for (const auto& p : j.at("points")) {
      ProjPoint pt = point_from_json(p);
      const int n = p.contains("orbit") ? p.at("orbit").get<int>() : pt.field()->degree();
      const unsigned m = p.at("mult").get<unsigned>();
      if (m < 1) throw ConfigError("multiplicities must be positive");
      c.groups.push_back({OrbitSpec{std::move(pt), n}, m});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("point config: ") + e.what());
  }
  if (c.groups.empty()) throw ConfigError("point config has no points");
  return c;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

/// Uniform representatives (u, v, 1), u, v in GF(2^size), one stream per (trial, orbit).
inline SurfaceConfig sample_config(const SearchConfig& cfg, std::size_t trial) {
  if (cfg.replay) return *cfg.replay;
  SurfaceConfig out;
  out.a = cfg.a;
  const std::uint64_t ts = trial_seed(cfg.seed, trial);
  std::uint64_t stream = 0;
  for (const auto& g : cfg.groups) {
    for (int n : g.orbit_sizes) {
      std::mt19937_64 rng(splitmix64(ts ^ splitmix64(0x5eed0000ULL + stream++)));
      FieldPtr f = field_new(n);
      const std::uint64_t u = rng() & f->mask();
      const std::uint64_t v = rng() & f->mask();
      ProjPoint p(f, FieldElem(f.get(), u), FieldElem(f.get(), v), FieldElem::one(f.get()));
      out.groups.push_back({OrbitSpec{std::move(p), n}, g.mult});
    }
  }
  return out;
}

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SurfaceConfig config;
  std::string outcome;  // stage name, HIT, or aborted
  std::string reason;
  std::optional<SurfaceReport> report;
  std::optional<LiftReport> lift;
  std::map<std::string, double> timings;
};

inline nlohmann::json to_json(const TrialRecord& r, bool timings) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& g : r.config.groups) {
    nlohmann::json p = point_to_json(g.orbit.representative);
    p["mult"] = g.mult;
    pts.push_back(p);
  }
  nlohmann::json j{{"trial", r.trial}, {"seed", r.seed}, {"a", r.config.a}, {"points", pts}, {"outcome", r.outcome}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.report) j["report"] = to_json(*r.report);
  if (r.lift) j["lift"] = to_json(*r.lift);
  if (timings) j["timings"] = r.timings;
  return j;
}

inline TrialRecord run_trial(const SearchConfig& cfg, std::size_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.seed, trial);
  rec.config = sample_config(cfg, trial);
  PipelineOptions opt;
  opt.gb = cfg.gb;
  try {
    PipelineResult res = verify_pipeline(rec.config, opt);
    rec.outcome = stage_name(res.outcome);
    rec.reason = res.reason;
    rec.timings = res.timings;
    if (res.outcome == Stage::Hit) {
      rec.report = res.report;
      if (cfg.lift) rec.lift = lifting_check(rec.config.a, rec.config.groups);
    }
  } catch (const GbAbort& e) {
    rec.outcome = "aborted";
    rec.reason = e.what();
  }
  return rec;
}

struct SearchStats {
  std::size_t trials = 0;
  std::size_t hits = 0;
  std::size_t aborted = 0;
  std::map<std::string, std::size_t> failures;  // by stage
  int speciality = 0;

  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials); }
  double percent() const { return 100.0 * rate(); }
  double log_rate() const { return hits == 0 ? -std::numeric_limits<double>::infinity() : std::log2(rate()); }
};

/// 5 - max(C(a+2, 2) - sum n_i C(m_i + 1, 2), 0).
inline int speciality(int a, const std::vector<MultGroup>& groups) {
  std::int64_t conditions = 0;
  for (const auto& g : groups) {
    for (int n : g.orbit_sizes) conditions += std::int64_t{n} * g.mult * (g.mult + 1) / 2;
  }
  const std::int64_t expected = std::int64_t{a + 2} * (a + 1) / 2 - conditions;
  return static_cast<int>(5 - std::max<std::int64_t>(expected, 0));
}

inline nlohmann::json to_json(const SearchStats& s) {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [k, v] : s.failures) f[k] = v;
  nlohmann::json j{{"trials", s.trials}, {"hits", s.hits},         {"aborted", s.aborted},
                   {"failures", f},      {"rate", s.rate()},       {"percent", s.percent()},
                   {"speciality", s.speciality}};
  // JSON has no infinity
  j["log_rate"] = s.hits == 0 ? nlohmann::json("-inf") : nlohmann::json(s.log_rate());
  return j;
}

/// Runs all trials on cfg.threads workers; writes one JSON line per trial to `out` (if
/// non-null) in trial order.
inline SearchStats run_search(const SearchConfig& cfg, std::ostream* out) {
  cfg.validate();
  SearchStats stats;
  stats.speciality = cfg.replay ? 0 : speciality(cfg.a, cfg.groups);
  if (cfg.replay) {
    std::vector<MultGroup> g;
    for (const auto& og : cfg.replay->groups) g.push_back({og.mult, {og.orbit.n}});
    stats.speciality = speciality(cfg.replay->a, g);
  }
  auto account = [&](const TrialRecord& r) {
    ++stats.trials;
    if (r.outcome == "HIT") {
      ++stats.hits;
    } else if (r.outcome == "aborted") {
      ++stats.aborted;
    } else {
      ++stats.failures[r.outcome];
    }
    if (out != nullptr) {
      *out << to_json(r, cfg.timings).dump() << '\n';
      if (!*out) throw std::runtime_error("write error on search output");
    }
  };

  const unsigned nt = cfg.threads;
  if (nt == 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) account(run_trial(cfg, i));
    return stats;
  }

  // workers claim indices below written + window; the writer drains in order
  const std::size_t window = 64 * static_cast<std::size_t>(nt);
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, TrialRecord> ready;
  std::size_t next_claim = 0, written = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return error || next_claim >= cfg.trials || next_claim < written + window; });
        if (error || next_claim >= cfg.trials) return;
        i = next_claim++;
      }
      try {
        TrialRecord r = run_trial(cfg, i);
        std::lock_guard lock(mu);
        ready.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
  {
    std::unique_lock lock(mu);
    while (written < cfg.trials) {
      cv.wait(lock, [&] { return error || ready.count(written) != 0; });
      if (error) break;
      TrialRecord r = std::move(ready.at(written));
      ready.erase(written);
      lock.unlock();
      try {
        account(r);
      } catch (...) {
        lock.lock();
        error = std::current_exception();
        break;
      }
      lock.lock();
      ++written;
      cv.notify_all();
    }
  }
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return stats;
}

}  // namespace ratsurf
