#include <gtest/gtest.h>

#include <random>

#include "ratsurf/hilbert.hpp"
#include "ratsurf/orbits.hpp"

using namespace ratsurf;

namespace {

ProjPoint Q() { return ProjPoint::parse(field_new(14), "t^11898", "t^137", "1"); }
ProjPoint R() { return ProjPoint::parse(field_new(5), "t^6", "t^15", "1"); }

}  // namespace

TEST(Orbits, BundledOrbitDegrees) {
  EXPECT_EQ(orbit_points(Q()).size(), 14u);
  EXPECT_EQ(orbit_points(R()).size(), 5u);
  EXPECT_EQ(orbit_points(ProjPoint::parse(field_new(1), "0", "0", "1")).size(), 1u);
  EXPECT_TRUE(is_full({Q(), 14}));
  EXPECT_FALSE(is_full({Q(), 7}));
}

TEST(Orbits, CollapsedOrbitIsNotFull) {
  // coordinates in the subfield GF(4) of GF(16)
  FieldPtr f = field_new(4);
  const FieldElem t = FieldElem::gen(f.get());
  const FieldElem w = t.pow(5);  // order 3
  ProjPoint p(f, w, FieldElem::one(f.get()), FieldElem::one(f.get()));
  EXPECT_EQ(orbit_points(p).size(), 2u);
  EXPECT_FALSE(is_full({p, 4}));
}

TEST(Orbits, NormalizationAndErrors) {
  FieldPtr f = field_new(3);
  const FieldElem t = FieldElem::gen(f.get());
  ProjPoint p(f, t, t * t, t);
  EXPECT_TRUE(p[2].is_one());
  EXPECT_EQ(p[0], FieldElem::one(f.get()));
  EXPECT_THROW(ProjPoint(f, FieldElem::zero(f.get()), FieldElem::zero(f.get()), FieldElem::zero(f.get())),
               PointError);
  EXPECT_THROW(ProjPoint(f, t, t, FieldElem::one(field_new(4).get())), PointError);
}

TEST(Orbits, IdealVanishesOnConjugates) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 4;
    FieldPtr f = field_new(n);
    ProjPoint p(f, FieldElem(f.get(), rng()), FieldElem(f.get(), rng()), FieldElem::one(f.get()));
    if (!is_full({p, n})) continue;
    const unsigned m = 1 + static_cast<unsigned>(trial % 3);
    const Ideal<F2> ideal = orbit_ideal(p, m);
    EXPECT_EQ(dimension(ideal), 0);
    EXPECT_EQ(degree(ideal), std::int64_t{n} * m * (m + 1) / 2);
    auto big = make_ring<FieldElem>({"x", "y", "z"}, MonomialOrder::grevlex(), f.get());
    for (const auto& q : orbit_points(p)) {
      const std::vector<FieldElem> pt{q[0], q[1], q[2]};
      for (const auto& g : ideal.generators()) {
        const auto lg = lift_coefficients(g, big);
        // every Hasse derivative of order < m vanishes at q
        for (int a = 0; a < static_cast<int>(m); ++a) {
          for (int b = 0; a + b < static_cast<int>(m); ++b) {
            EXPECT_TRUE(lg.hasse(Monomial::from({a, b, 0})).eval(pt).is_zero());
          }
        }
      }
    }
  }
}

TEST(Orbits, RationalPointIdeal) {
  const ProjPoint p = ProjPoint::parse(field_new(1), "0", "0", "1");
  const Ideal<F2> i = orbit_ideal(p, 3);
  auto ring = plane_ring();
  EXPECT_TRUE(same_ideal(i, power(Ideal<F2>(ring, {parse_poly(ring, "x"), parse_poly(ring, "y")}), 3)));
  EXPECT_EQ(degree(i), 6);
  EXPECT_THROW(orbit_ideal(p, 0), PointError);
}

TEST(Orbits, Disjointness) {
  EXPECT_TRUE(orbits_disjoint({{Q(), 14}, {R(), 5}}));
  EXPECT_FALSE(orbits_disjoint({{Q(), 14}, {Q().frobenius().frobenius(), 14}}));
  EXPECT_FALSE(orbits_disjoint({{Q(), 13}}));
  // the same GF(16) orbit written over a field with another modulus
  FieldPtr a = field_new(4, 0b10011), b = field_new(4, 0b11001);
  ProjPoint pa(a, FieldElem::gen(a.get()), FieldElem::one(a.get()), FieldElem::one(a.get()));
  FieldEmbedding emb(*a, *b);
  ProjPoint pb(b, emb(pa[0]), emb(pa[1]), emb(pa[2]));
  EXPECT_FALSE(orbits_disjoint({{pa, 4}, {pb, 4}}));
  ProjPoint pc(a, FieldElem::gen(a.get()), FieldElem::gen(a.get()), FieldElem::one(a.get()));
  EXPECT_TRUE(orbits_disjoint({{pa, 4}, {pc, 4}}));
}

TEST(Orbits, JsonRoundTrip) {
  for (const ProjPoint& p : {Q(), R(), ProjPoint::parse(field_new(4, 0b11001), "t^3", "t", "1")}) {
    const auto j = point_to_json(p);
    EXPECT_EQ(point_from_json(j), p);
  }
  EXPECT_FALSE(point_to_json(Q()).contains("modulus"));
  EXPECT_TRUE(point_to_json(ProjPoint::parse(field_new(4, 0b11001), "t", "t", "1")).contains("modulus"));
  EXPECT_THROW(point_from_json(nlohmann::json{{"n", 3}}), PointError);
  EXPECT_THROW(point_from_json(nlohmann::json{{"n", 3}, {"coords", {"t", "1"}}}), PointError);
  EXPECT_THROW(point_from_json(nlohmann::json{{"n", 4}, {"modulus", "t^4+t^2+1"}, {"coords", {"t", "1", "1"}}}),
               FieldError);
}
