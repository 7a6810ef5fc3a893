#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "ratsurf/betasolve.hpp"

using namespace ratsurf;

TEST(BetaSolve, Degree11Example) {
  const auto s = solve_beta(11, 11, -11, 9);
  EXPECT_FALSE(s.infeasible);
  ASSERT_EQ(s.solutions.size(), 1u);
  const std::map<int, int> expected{{3, 1}, {2, 14}, {1, 5}};
  EXPECT_EQ(s.solutions[0].beta, expected);
  EXPECT_EQ(s.solutions[0].points(), 20);
  EXPECT_EQ(invariants_from_multiplicities(9, s.solutions[0].expand()), (Invariants{11, 11, -11}));
}

TEST(BetaSolve, QuinticExample) {
  const auto s = solve_beta(5, 2, 1, 4);
  ASSERT_EQ(s.solutions.size(), 1u);
  EXPECT_EQ(s.solutions[0].beta, (std::map<int, int>{{2, 1}, {1, 7}}));
  const auto all = scan_a(5, 2, 1, 2, 6);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].a, 4);
  EXPECT_EQ(all[1].beta, (std::map<int, int>{{2, 4}, {1, 4}}));
  EXPECT_EQ(all[2].beta, (std::map<int, int>{{3, 1}, {2, 5}, {1, 2}}));
}

TEST(BetaSolve, RoundTripOfScan) {
  for (auto [d, pi, k2] : {std::tuple{11, 11, -11}, {10, 9, -7}, {9, 6, -1}, {8, 5, 1}}) {
    for (const auto& v : scan_a(d, pi, k2, 1, 14)) {
      EXPECT_EQ(invariants_from_multiplicities(v.a, v.expand()), (Invariants{d, pi, k2}));
    }
  }
}

TEST(BetaSolve, CompleteAgainstEnumeration) {
  for (int a = 2; a <= 7; ++a) {
    // every multiset of at most 9 multiplicities in [1, a-1]
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::set<std::vector<int>>> by_inv;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int top) -> void {
      const Invariants inv = invariants_from_multiplicities(a, cur);
      by_inv[{inv.d, inv.pi, inv.k2}].insert(cur);
      if (cur.size() == 9) return;
      for (int j = top; j >= 1; --j) {
        cur.push_back(j);
        self(self, j);
        cur.pop_back();
      }
    };
    rec(rec, a - 1);
    for (const auto& [key, vecs] : by_inv) {
      const auto [d, pi, k2] = key;
      std::set<std::vector<int>> got;
      for (const auto& v : solve_beta(d, pi, k2, a).solutions) got.insert(v.expand());
      EXPECT_EQ(got, vecs) << "a=" << a << " d=" << d << " pi=" << pi << " K2=" << k2;
    }
  }
}

TEST(BetaSolve, Infeasible) {
  EXPECT_TRUE(solve_beta(5, 2, 10, 4).infeasible);
  EXPECT_TRUE(solve_beta(17, 2, 1, 4).infeasible);
  EXPECT_TRUE(solve_beta(5, 4, 1, 4).infeasible);
  EXPECT_FALSE(solve_beta(5, 2, 2, 4).infeasible);
  EXPECT_TRUE(solve_beta(5, 2, 2, 4).solutions.empty());
}

TEST(BetaSolve, Json) {
  const auto j = to_json(solve_beta(11, 11, -11, 9).solutions.at(0));
  EXPECT_EQ(j.dump(), R"({"a":9,"beta":{"1":5,"2":14,"3":1}})");
}
