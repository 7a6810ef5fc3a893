#include <gtest/gtest.h>

#include <random>

#include "ratsurf/hilbert.hpp"

using namespace ratsurf;

namespace {

std::int64_t count_standard(const std::vector<Monomial>& gens, std::size_t nvars, int k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i));
  auto ring = make_ring<F2>(names);
  std::int64_t n = 0;
  for (const auto& m : monomials_of_degree(*ring, k)) {
    bool standard = true;
    for (const auto& g : gens) standard = standard && !g.divides(m);
    n += standard ? 1 : 0;
  }
  return n;
}

}  // namespace

TEST(Hilbert, TwistedCubic) {
  auto x = make_ring<F2>({"a", "b", "c", "d"});
  Ideal<F2> i(x, {parse_poly(x, "a*c+b^2"), parse_poly(x, "a*d+b*c"), parse_poly(x, "b*d+c^2")});
  const HilbertPoly hp = hilbert_poly(i);
  EXPECT_EQ(hp.dimension(), 1);
  EXPECT_EQ(hp.degree(), 3);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(hp.series_coeff(k), 3 * k + 1);
  EXPECT_EQ(hp.genera(), (std::vector<std::int64_t>{0, 2}));
}

TEST(Hilbert, PlaneCurves) {
  auto x = make_ring<F2>({"x", "y", "z"});
  for (int d = 1; d <= 7; ++d) {
    Ideal<F2> i(x, {parse_poly(x, "x^" + std::to_string(d) + "+y*z^" + std::to_string(d - 1))});
    EXPECT_EQ(degree(i), d);
    EXPECT_EQ(codim(i), 1);
    EXPECT_EQ(genera(i), (std::vector<std::int64_t>{(d - 1) * (d - 2) / 2, d - 1}));
  }
}

TEST(Hilbert, EllipticQuartic) {
  auto x = make_ring<F2>({"a", "b", "c", "d"});
  Ideal<F2> i(x, {parse_poly(x, "a*b+c*d"), parse_poly(x, "a^2+b*c+d^2")});
  EXPECT_EQ(degree(i), 4);
  EXPECT_EQ(genera(i), (std::vector<std::int64_t>{1, 3}));
}

TEST(Hilbert, PointsAndEmptyScheme) {
  auto x = make_ring<F2>({"x", "y", "z"});
  Ideal<F2> pt(x, {parse_poly(x, "x"), parse_poly(x, "y")});
  EXPECT_EQ(dimension(pt), 0);
  EXPECT_EQ(degree(pt), 1);
  Ideal<F2> fat(x, {parse_poly(x, "x^2"), parse_poly(x, "x*y"), parse_poly(x, "y^2")});
  EXPECT_EQ(degree(fat), 3);
  Ideal<F2> irrelevant(x, {parse_poly(x, "x"), parse_poly(x, "y"), parse_poly(x, "z^4")});
  EXPECT_EQ(dimension(irrelevant), -1);
  EXPECT_EQ(degree(irrelevant), 0);
  EXPECT_EQ(hilbert_poly(irrelevant).series_coeff(3), 1);
  EXPECT_EQ(hilbert_poly(irrelevant).series_coeff(4), 0);
}

TEST(Hilbert, NumeratorMatchesStandardMonomialCount) {
  std::mt19937_64 rng(17);
  for (std::size_t nv : {4u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Monomial> gens;
      const int ng = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int g = 0; g < ng; ++g) {
        std::vector<int> e(nv);
        for (auto& v : e) v = std::uniform_int_distribution<int>(0, 3)(rng);
        if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) e[0] = 1;
        gens.push_back(Monomial::from(e));
      }
      const HilbertPoly hp = hilbert_poly_of_monomials(gens, nv);
      for (int k = 0; k <= 12; ++k) EXPECT_EQ(hp.series_coeff(k), count_standard(gens, nv, k)) << k;
      // the polynomial agrees with the function in high degree
      for (int k = 30; k <= 33; ++k) EXPECT_EQ(hp(k), hp.series_coeff(k));
    }
  }
}

TEST(Hilbert, RejectsInhomogeneousInput) {
  auto x = make_ring<F2>({"x", "y", "z"});
  EXPECT_THROW(hilbert_poly(Ideal<F2>(x, {parse_poly(x, "x^2+y")})), RingError);
  auto w = make_ring<F2>({"x", "y"}, MonomialOrder::grevlex(), {}, {1, 2});
  EXPECT_THROW(hilbert_poly(Ideal<F2>(w, {parse_poly(w, "x^2+y")})), RingError);
}
