#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ratsurf/conditions.hpp"
#include "ratsurf/hilbert.hpp"

using namespace ratsurf;

namespace {

std::vector<OrbitGroup> degree11_groups() {
  return {{{ProjPoint::parse(field_new(1), "0", "0", "1"), 1}, 3},
          {{ProjPoint::parse(field_new(14), "t^11898", "t^137", "1"), 14}, 2},
          {{ProjPoint::parse(field_new(5), "t^6", "t^15", "1"), 5}, 1}};
}

}  // namespace

TEST(BitMatrix, KernelsAndRank) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 70;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, (rng() % 3) == 0);
    }
    const BitMatrix k = m.kernel();
    EXPECT_EQ(m.rank() + k.rows(), c);
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(k.rank(), k.rows());
    const BitMatrix l = m.left_kernel();
    EXPECT_EQ(m.rank() + l.rows(), r);
    EXPECT_TRUE((l * m).is_zero());
    EXPECT_EQ(m.transpose().rank(), m.rank());
  }
}

TEST(BitMatrix, RankByBruteForce) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    BitMatrix m(r, c);
    std::vector<std::uint64_t> rows(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const bool b = rng() & 1u;
        m.set(i, j, b);
        if (b) rows[i] |= 1u << j;
      }
    }
    // span size by enumerating all combinations
    std::vector<bool> seen(1u << c, false);
    std::size_t span = 0;
    for (std::uint64_t s = 0; s < (1u << r); ++s) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if ((s >> i) & 1u) v ^= rows[i];
      }
      if (!seen[v]) {
        seen[v] = true;
        ++span;
      }
    }
    EXPECT_EQ(std::size_t{1} << m.rank(), span);
  }
}

TEST(Conditions, HasseIndexOrder) {
  const auto idx = hasse_indices(3);
  const std::vector<std::pair<int, int>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(idx, expected);
}

TEST(Conditions, Degree11Matrix) {
  const ConditionMatrix cm = condition_matrix(9, degree11_groups());
  EXPECT_EQ(cm.matrix.rows(), 53u);
  EXPECT_EQ(cm.matrix.cols(), 55u);
  EXPECT_EQ(cm.matrix.rank(), 50u);
  EXPECT_EQ(cm.matrix.kernel().rows(), 5u);
  EXPECT_EQ(cm.matrix.left_kernel().rows(), 3u);
  ASSERT_EQ(cm.provenance.size(), 53u);
  EXPECT_EQ(cm.provenance[0].group, 0u);
  EXPECT_EQ(cm.provenance[6].group, 1u);
  EXPECT_EQ(cm.provenance.back().group, 2u);
  EXPECT_EQ(cm.provenance.back().slot, 4);
}

TEST(Conditions, KernelEqualsIdealPieceOnRandomConfigs) {
  std::mt19937_64 rng(41);
  int passed = 0;
  for (int k = 0; k < 100; ++k) {
    auto [a, groups] = oracle::random_small_config(rng);
    const bool ok = oracle::kernel_matches_ideal(a, groups);
    EXPECT_TRUE(ok) << "instance " << k;
    passed += ok ? 1 : 0;
  }
  EXPECT_EQ(passed, 100);
}

TEST(Conditions, RationalPointConditions) {
  // a triple point at (0:0:1) kills every monomial x^i y^j z^k with i + j < 3
  const ConditionMatrix cm = condition_matrix(4, {{{ProjPoint::parse(field_new(1), "0", "0", "1"), 1}, 3}});
  EXPECT_EQ(cm.matrix.rank(), 6u);
  for (const auto& f : system_basis(cm)) {
    for (const auto& t : f.terms()) EXPECT_GE(t.m[0] + t.m[1], 3);
  }
}

TEST(Conditions, ChartIsEnforced) {
  FieldPtr f = field_new(2);
  ProjPoint p(f, FieldElem::gen(f.get()), FieldElem::one(f.get()), FieldElem::zero(f.get()));
  EXPECT_THROW(condition_matrix(3, {{{p, 2}, 1}}), ChartError);
}

TEST(Conditions, Degree11FormsLieInTheOrbitIdeals) {
  const auto groups = degree11_groups();
  const auto forms = system_basis(condition_matrix(9, groups));
  ASSERT_EQ(forms.size(), 5u);
  for (const auto& g : groups) {
    const Ideal<F2> i = orbit_ideal(g.orbit.representative, g.mult);
    for (const auto& f : forms) EXPECT_TRUE(i.contains(f));
  }
}
