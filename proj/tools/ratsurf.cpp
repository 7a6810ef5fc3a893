// ratsurf: rational surfaces in P^4 over F_2 from Frobenius orbits.
//
//   ratsurf solve-mults --d 11 --pi 11 --k2 -11 --a 9
//   ratsurf orbit --n 14 --coords t^11898,t^137,1 --mult 2
//   ratsurf verify data/degree11_example.json --expect data/degree11_expected.json
//   ratsurf search --a 4 --mults 2:1,1:7 --trials 200 --seed 1 --out hits.jsonl --threads 8
//   ratsurf lift-check --config hit.json
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratsurf/betasolve.hpp"
#include "ratsurf/liftcheck.hpp"
#include "ratsurf/search.hpp"
#include "ratsurf/surface.hpp"

using namespace ratsurf;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// First JSON object in a file that may hold a single document or JSON lines.
json read_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": no JSON record");
}

/// Every value in `expected` must be present and equal in `actual`; objects are compared
/// key by key (extra keys in `actual` are fine), arrays element by element.
void diff_json(const json& expected, const json& actual, const std::string& path, std::vector<std::string>& out) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      out.push_back(path + ": expected an object, got " + actual.dump());
      return;
    }
    for (const auto& [k, v] : expected.items()) {
      if (!actual.contains(k)) {
        out.push_back(path + "/" + k + ": missing, expected " + v.dump());
        continue;
      }
      diff_json(v, actual.at(k), path + "/" + k, out);
    }
    return;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
      return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) diff_json(expected[i], actual[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void print_report(const SurfaceConfig& cfg, const PipelineResult& res, const std::optional<LiftReport>& lift) {
  std::vector<std::int64_t> od(res.orbit_degrees.begin(), res.orbit_degrees.end());
  std::cout << "orbit degrees: " << join(od, " ") << "\n";
  if (res.matrix_rows > 0) {
    std::cout << "condition matrix: " << res.matrix_rows << "x" << res.matrix_cols << ", rank " << res.matrix_rank
              << ", linear system dimension " << res.system_dim << "\n";
  }
  if (res.outcome != Stage::Orbit && res.outcome != Stage::Rank) {
    std::cout << "baselocus: degree " << res.baselocus_degree << " (expected " << cfg.condition_count()
              << "), dimension " << res.baselocus_dim << "\n";
  }
  if (res.report) {
    const SurfaceReport& r = *res.report;
    std::cout << "image: codim " << r.codim << ", degree " << r.degree << ", genera {" << join(r.genera, ",") << "}\n";
    if (!r.min_gen_degrees.empty()) {
      std::vector<std::int64_t> d(r.min_gen_degrees.begin(), r.min_gen_degrees.end());
      std::cout << "minimal generator degrees: " << join(d, " ") << "\n";
      std::cout << "jacobian minors: codim " << r.minor_codim << (r.smooth ? " (smooth)" : " (singular)") << "\n";
    }
    if (r.secants) {
      const SecantAnalysis& s = *r.secants;
      std::cout << "secants: codim " << s.codim << ", degree " << s.degree << ", " << s.lines.size() << " lines\n";
      for (std::size_t i = 0; i < s.lines.size(); ++i) {
        const SecantLine& l = s.lines[i];
        std::cout << "  line " << i + 1 << ": ";
        for (std::size_t k = 0; k < l.forms.size(); ++k) std::cout << (k ? ", " : "") << l.forms[k];
        std::cout << "; meets the surface in degree " << l.intersection_degree << ", codim " << l.intersection_codim;
        if (l.field_degree > 1) std::cout << "; conjugate over GF(2^" << l.field_degree << ")";
        std::cout << "\n";
      }
      for (const auto& u : s.unresolved) {
        std::cout << "  unresolved component: codim " << u.codim << ", degree " << u.degree << "\n";
      }
    }
  }
  if (lift) {
    if (lift->failure.empty() || lift->tangent_dim + lift->tangent_codim == lift->deformation_dim) {
      std::cout << "lifting check: tangent dimension " << lift->tangent_dim << " of " << lift->deformation_dim
                << ", codim " << lift->tangent_codim << " (required " << lift->expected_codim << ")"
                << (lift->passes ? ", passes" : ", fails") << "\n";
    }
    if (!lift->failure.empty()) std::cout << "lifting check: " << lift->failure << "\n";
  }
  std::cout << "outcome: " << stage_name(res.outcome);
  if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
  std::cout << "\n";
}

int cmd_solve(std::int64_t d, std::int64_t pi, std::int64_t k2, std::optional<int> a, std::optional<int> a_min,
              std::optional<int> a_max) {
  json out;
  json sols = json::array();
  if (a) {
    if (a_min || a_max) throw InputError("give either --a or --a-min/--a-max");
    auto s = solve_beta(d, pi, k2, *a);
    for (const auto& v : s.solutions) sols.push_back(to_json(v));
    out["infeasible"] = s.infeasible;
  } else {
    if (!a_min || !a_max) throw InputError("give --a or both --a-min and --a-max");
    if (*a_min > *a_max) throw InputError("--a-min exceeds --a-max");
    for (const auto& v : scan_a(d, pi, k2, *a_min, *a_max)) sols.push_back(to_json(v));
  }
  out["target"] = {{"d", d}, {"pi", pi}, {"K2", k2}};
  out["solutions"] = sols;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_orbit(int n, const std::string& coords, unsigned mult, const std::string& modulus) {
  std::vector<std::string> c;
  std::stringstream ss(coords);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(item);
  if (c.size() != 3) throw InputError("--coords needs three comma-separated field elements");
  json rec{{"n", n}, {"coords", c}};
  if (!modulus.empty()) rec["modulus"] = modulus;
  const ProjPoint p = point_from_json(rec);
  const auto pts = orbit_points(p);
  json out{{"point", point_to_json(p)}, {"orbit_degree", pts.size()}, {"full", static_cast<int>(pts.size()) == n}};
  json members = json::array();
  for (const auto& q : pts) members.push_back(point_to_json(q)["coords"]);
  out["orbit"] = members;
  if (mult > 0) {
    const HilbertPoly hp = hilbert_poly(orbit_ideal(p, mult));
    out["mult"] = mult;
    out["ideal_degree"] = hp.degree();
    out["ideal_dimension"] = hp.dimension();
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& expect, const std::string& out_path, bool lift, bool timings,
               std::optional<int> expect_secants) {
  const SurfaceConfig cfg = surface_config_from_json(read_json_file(path));
  PipelineOptions opt;
  opt.expect_secants = expect_secants;
  const PipelineResult res = verify_pipeline(cfg, opt);
  std::optional<LiftReport> lr;
  if (lift && res.outcome != Stage::Orbit && res.outcome != Stage::Rank) lr = lifting_check(cfg.a, cfg.groups);
  print_report(cfg, res, lr);
  json cert = certificate(cfg, res, timings);
  if (lr) cert["lift"] = to_json(*lr);
  if (!out_path.empty()) {
    std::ofstream o(out_path);
    if (!o) throw InputError("cannot write " + out_path);
    o << cert.dump(2) << "\n";
  }
  bool ok = res.outcome == Stage::Hit && (!lr || lr->passes);
  if (!expect.empty()) {
    std::vector<std::string> diffs;
    diff_json(read_json_file(expect), cert, "", diffs);
    for (const auto& d : diffs) std::cout << "mismatch " << d << "\n";
    std::cout << "expected certificate: " << (diffs.empty() ? "match" : "MISMATCH") << "\n";
    ok = diffs.empty();
  }
  return ok ? kOk : kMismatch;
}

int cmd_search(SearchConfig cfg, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = nullptr;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write " + out_path);
    out = &file;
  }
  const SearchStats stats = run_search(cfg, out);
  json j = to_json(stats);
  std::cout << j.dump(2) << "\n";
  char log_rate[32] = "-inf";
  if (stats.hits > 0) std::snprintf(log_rate, sizeof log_rate, "%.1f", stats.log_rate());
  char line[160];
  std::snprintf(line, sizeof line, "trials %zu  surfaces %zu  rate %.4f%%  log rate %s  speciality %d\n", stats.trials,
                stats.hits, stats.percent(), log_rate, stats.speciality);
  std::cerr << line;
  return kOk;
}

int cmd_lift(const std::string& path) {
  const SurfaceConfig cfg = surface_config_from_json(read_record(path));
  const LiftReport r = lifting_check(cfg.a, cfg.groups);
  std::cout << to_json(r).dump(2) << "\n";
  return r.passes ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational surfaces in P^4 over F_2 from Frobenius orbits of points in P^2"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve-mults", "multiplicity vectors with given degree, sectional genus, K^2");
  std::int64_t d = 0, pi = 0, k2 = 0;
  std::optional<int> a_opt, a_min, a_max;
  solve->add_option("--d", d, "degree")->required();
  solve->add_option("--pi", pi, "sectional genus")->required();
  solve->add_option("--k2", k2, "self-intersection of the canonical class")->required();
  solve->add_option("--a", a_opt, "plane degree");
  solve->add_option("--a-min", a_min, "smallest plane degree to scan");
  solve->add_option("--a-max", a_max, "largest plane degree to scan");

  auto* orbit = app.add_subcommand("orbit", "Frobenius orbit of a point and the degree of its ideal");
  int on = 0;
  std::string coords, modulus;
  unsigned omult = 1;
  orbit->add_option("--n", on, "field degree")->required();
  orbit->add_option("--coords", coords, "x,y,z as sums of powers of t")->required();
  orbit->add_option("--mult", omult, "multiplicity for the orbit ideal (0 skips it)");
  orbit->add_option("--modulus", modulus, "irreducible modulus, e.g. t^5+t^3+t^2+t+1");

  auto* verify = app.add_subcommand("verify", "run the full pipeline and the lifting check on explicit points");
  std::string vpath, expect, vout;
  bool no_lift = false, vtimings = false;
  std::optional<int> expect_secants;
  verify->add_option("points", vpath, "point configuration JSON");
  verify->add_option("--replay", vpath, "point configuration JSON (same as the positional argument)");
  verify->add_option("--expect", expect, "certificate JSON with values that must match");
  verify->add_option("--out", vout, "write the certificate JSON here");
  verify->add_option("--expect-secants", expect_secants, "fail the secant stage unless this many lines are found");
  verify->add_flag("--no-lift", no_lift, "skip the lifting check");
  verify->add_flag("--timings", vtimings, "include stage timings in the certificate");

  auto* search = app.add_subcommand("search", "seeded random search");
  SearchConfig scfg;
  std::string mults, sconfig, sout, replay;
  std::size_t max_pairs = 0;
  search->add_option("--config", sconfig, "search configuration JSON");
  search->add_option("--a", scfg.a, "plane degree");
  search->add_option("--mults", mults, "j:count[,j:count...], one orbit of size count with multiplicity j");
  search->add_option("--trials", scfg.trials, "number of trials");
  search->add_option("--seed", scfg.seed, "64-bit seed");
  search->add_option("--out", sout, "JSONL output path");
  search->add_option("--threads", scfg.threads, "worker threads");
  search->add_option("--replay", replay, "point configuration JSON used for every trial");
  search->add_option("--max-pairs", max_pairs, "abort a trial after this many Groebner pairs (0: no limit)");
  search->add_flag("--lift", scfg.lift, "run the lifting check on hits");
  search->add_flag("--timings", scfg.timings, "include stage timings in the JSONL (not reproducible)");

  auto* lift = app.add_subcommand("lift-check", "lifting criterion for a configuration or search hit");
  std::string lpath;
  lift->add_option("--config", lpath, "point configuration JSON or a JSONL trial record")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kInput;
  }

  try {
    if (*solve) return cmd_solve(d, pi, k2, a_opt, a_min, a_max);
    if (*orbit) return cmd_orbit(on, coords, omult, modulus);
    if (*verify) {
      if (vpath.empty()) throw InputError("verify needs a point configuration file");
      return cmd_verify(vpath, expect, vout, !no_lift, vtimings, expect_secants);
    }
    if (*search) {
      SearchConfig cfg = scfg;
      if (!sconfig.empty()) {
        SearchConfig file = search_config_from_json(read_json_file(sconfig));
        file.threads = scfg.threads;
        file.lift = scfg.lift;
        file.timings = scfg.timings;
        if (search->count("--trials")) file.trials = scfg.trials;
        if (search->count("--seed")) file.seed = scfg.seed;
        cfg = file;
      }
      if (!mults.empty()) cfg.groups = parse_mults(mults);
      if (!replay.empty()) {
        cfg.replay = surface_config_from_json(read_json_file(replay));
        cfg.a = cfg.replay->a;
      }
      cfg.gb.max_pairs = max_pairs;
      return cmd_search(cfg, sout);
    }
    if (*lift) return cmd_lift(lpath);
  } catch (const std::exception& e) {
    // input, parse, field and configuration errors
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
