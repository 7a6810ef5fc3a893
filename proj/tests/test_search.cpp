#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ratsurf/search.hpp"

using namespace ratsurf;

namespace {

SearchConfig quintic(std::size_t trials, unsigned threads = 1) {
  SearchConfig c;
  c.a = 4;
  c.groups = parse_mults("2:1,1:7");
  c.trials = trials;
  c.seed = 1;
  c.threads = threads;
  return c;
}

nlohmann::json read(const std::string& name) {
  std::ifstream in(std::string(RATSURF_DATA) + "/" + name);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Search, ParseMults) {
  const auto g = parse_mults("3:1,2:14,1:5");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1].mult, 2u);
  EXPECT_EQ(g[1].orbit_sizes, std::vector<int>{14});
  for (const char* bad : {"", "3", "3:", ":2", "a:1", "0:2", "2:0", "2:1,", "2:1x"}) {
    EXPECT_THROW(parse_mults(bad), ConfigError) << bad;
  }
}

TEST(Search, ConfigFiles) {
  const SearchConfig c = search_config_from_json(read("quintic_search.json"));
  EXPECT_EQ(c.a, 4);
  EXPECT_EQ(c.trials, 200u);
  ASSERT_EQ(c.groups.size(), 2u);
  EXPECT_EQ(c.groups[1].orbit_sizes, std::vector<int>{7});
  const SurfaceConfig s = surface_config_from_json(read("degree11_example.json"));
  EXPECT_EQ(s.a, 9);
  EXPECT_EQ(s.multiplicities().size(), 20u);
  EXPECT_EQ(s.condition_count(), 53);
  EXPECT_THROW(search_config_from_json(nlohmann::json{{"a", 4}}), ConfigError);
  EXPECT_THROW(surface_config_from_json(nlohmann::json{{"a", 4}, {"points", nlohmann::json::array()}}), ConfigError);
}

TEST(Search, Validation) {
  SearchConfig c = quintic(1);
  c.trials = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = quintic(1);
  c.threads = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = quintic(1);
  c.groups = {{1, {64}}};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Search, Splitmix) {
  // first output of the reference generator from state 0
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Search, SamplingIsDeterministic) {
  const SearchConfig c = quintic(1);
  for (std::size_t t = 0; t < 10; ++t) {
    const SurfaceConfig a = sample_config(c, t), b = sample_config(c, t);
    ASSERT_EQ(a.groups.size(), 2u);
    for (std::size_t g = 0; g < 2; ++g) {
      EXPECT_EQ(a.groups[g].orbit.representative, b.groups[g].orbit.representative);
      EXPECT_TRUE(a.groups[g].orbit.representative.in_z_chart());
    }
    EXPECT_EQ(a.groups[1].orbit.representative.field()->degree(), 7);
  }
  EXPECT_FALSE(sample_config(c, 0).groups[1].orbit.representative == sample_config(c, 1).groups[1].orbit.representative);
}

TEST(Search, StatsAreConsistent) {
  std::ostringstream out;
  const SearchStats s = run_search(quintic(30), &out);
  std::size_t failures = 0;
  for (const auto& [stage, n] : s.failures) failures += n;
  EXPECT_EQ(s.trials, 30u);
  EXPECT_EQ(s.hits + s.aborted + failures, s.trials);
  EXPECT_GT(s.hits, 0u);
  EXPECT_EQ(s.speciality, 0);
  std::istringstream in(out.str());
  std::string line;
  std::size_t n = 0, hits = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("trial"), n);
    EXPECT_FALSE(j.contains("timings"));
    hits += j.at("outcome") == "HIT" ? 1 : 0;
    ++n;
  }
  EXPECT_EQ(n, 30u);
  EXPECT_EQ(hits, s.hits);
  const auto js = to_json(s);
  EXPECT_DOUBLE_EQ(js.at("rate").get<double>(), static_cast<double>(s.hits) / 30.0);
}

TEST(Search, ThreadCountDoesNotChangeOutput) {
  std::ostringstream one, eight;
  run_search(quintic(40, 1), &one);
  run_search(quintic(40, 8), &eight);
  EXPECT_EQ(one.str(), eight.str());
  EXPECT_FALSE(one.str().empty());
}

TEST(Search, Speciality) {
  EXPECT_EQ(speciality(9, parse_mults("3:1,2:14,1:5")), 3);
  EXPECT_EQ(speciality(4, parse_mults("2:1,1:7")), 0);
  EXPECT_EQ(speciality(4, parse_mults("1:7")), -3);  // more sections than a map to P^4 needs
}

TEST(Search, ReplayRepeatsOneConfiguration) {
  SearchConfig c = quintic(20);
  std::optional<SurfaceConfig> hit;
  for (std::size_t t = 0; t < 20 && !hit; ++t) {
    if (run_trial(c, t).outcome == "HIT") hit = sample_config(c, t);
  }
  ASSERT_TRUE(hit);
  SearchConfig r;
  r.a = 4;
  r.trials = 3;
  r.replay = hit;
  r.lift = true;
  std::ostringstream out;
  const SearchStats s = run_search(r, &out);
  EXPECT_EQ(s.hits, 3u);
  EXPECT_NE(out.str().find("\"lift\""), std::string::npos);
}

TEST(Search, PairLimitMarksTrialsAborted) {
  SearchConfig c = quintic(5);
  c.gb.max_pairs = 1;
  const SearchStats s = run_search(c, nullptr);
  EXPECT_GT(s.aborted, 0u);
  const TrialRecord r = run_trial(c, 0);
  if (r.outcome == "aborted") {
    EXPECT_FALSE(r.reason.empty());
  }
}

TEST(Search, NoHitsGiveMinusInfinity) {
  SearchStats s;
  s.trials = 10;
  EXPECT_EQ(to_json(s).at("log_rate"), "-inf");
}
