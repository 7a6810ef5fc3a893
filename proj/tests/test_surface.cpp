#include <gtest/gtest.h>

#include "ratsurf/betasolve.hpp"
#include "ratsurf/search.hpp"
#include "ratsurf/surface.hpp"

using namespace ratsurf;

namespace {

Poly<F2> T(const std::string& s) { return parse_poly(target_ring(), s); }
Poly<F2> S(const std::string& s) { return parse_poly(plane_ring(), s); }

SecantAnalysis secants_of(const std::vector<std::string>& gens) {
  std::vector<Poly<F2>> mg;
  for (const auto& g : gens) mg.push_back(T(g));
  return six_secants(Ideal<F2>(target_ring(), mg), mg);
}

}  // namespace

TEST(Surface, BaselocusCheck) {
  EXPECT_TRUE(baselocus_check({S("x"), S("y")}, 1));
  EXPECT_FALSE(baselocus_check({S("x"), S("y")}, 2));
  EXPECT_TRUE(baselocus_check({S("x^2"), S("y")}, 2));
  EXPECT_FALSE(baselocus_check({S("x*z"), S("y*z")}, 1));  // common line z = 0
  EXPECT_TRUE(baselocus_check({S("x"), S("y"), S("z")}, 0));
}

TEST(Surface, JacobianCriterion) {
  auto p2 = make_ring<F2>({"a", "b", "c"});
  auto p3 = make_ring<F2>({"a", "b", "c", "d"});
  EXPECT_TRUE(smoothness_check(Ideal<F2>(p2, {parse_poly(p2, "a*b+c^2")})));
  EXPECT_TRUE(smoothness_check(Ideal<F2>(p3, {parse_poly(p3, "a*b+c*d")})));
  // cone over a conic, vertex (0:0:0:1)
  EXPECT_FALSE(smoothness_check(Ideal<F2>(p3, {parse_poly(p3, "a*b+c^2")})));
  // two planes in P^4 meeting in a point
  const Ideal<F2> planes = intersect(Ideal<F2>(target_ring(), {T("x0"), T("x1")}),
                                     Ideal<F2>(target_ring(), {T("x2"), T("x3")}));
  EXPECT_EQ(codim(planes), 2);
  EXPECT_FALSE(smoothness_check(planes));
}

TEST(Surface, ConjugateLinePairOverGF4) {
  // colon ideal (x0, x1, x2^2 + x2 x3 + x3^2): two lines conjugate over GF(4)
  const auto s = secants_of({"x0*x4^4", "x1*x4^4", "x2^2*x4^3+x2*x3*x4^3+x3^2*x4^3", "x4^6"});
  EXPECT_EQ(s.codim, 3);
  EXPECT_EQ(s.degree, 2);
  ASSERT_EQ(s.lines.size(), 2u);
  for (const auto& l : s.lines) {
    EXPECT_EQ(l.field_degree, 2);
    EXPECT_EQ(l.enumeration_degree, 2);
    EXPECT_EQ(l.forms.size(), 3u);
  }
  EXPECT_NE(s.lines[0].forms, s.lines[1].forms);
  EXPECT_EQ(s.lines[0].intersection_degree, s.lines[1].intersection_degree);
  EXPECT_TRUE(s.unresolved.empty());
}

TEST(Surface, RationalLinePair) {
  const auto s = secants_of({"x0*x4^4", "x1*x4^4", "x2*x3*x4^3", "x4^6"});
  EXPECT_EQ(s.degree, 2);
  ASSERT_EQ(s.lines.size(), 2u);
  for (const auto& l : s.lines) {
    EXPECT_EQ(l.field_degree, 1);
    EXPECT_EQ(l.enumeration_degree, 1);
  }
  EXPECT_TRUE(s.unresolved.empty());
}

TEST(Surface, UnitQuotientHasNoSecants) {
  const auto s = secants_of({"x0*x1", "x2^3+x3*x4^2"});
  EXPECT_EQ(s.degree, 0);
  EXPECT_TRUE(s.lines.empty());
  EXPECT_TRUE(s.unresolved.empty());
}

TEST(Surface, NonLinearResidualIsReportedUnresolved) {
  // the residual scheme is the smooth conic x0 = x1 = x2 x3 + x4^2 = 0, which holds no line
  const auto s = secants_of({"x0*x4^4", "x1*x4^4", "x2*x3*x4^3+x4^5", "x4^6"});
  EXPECT_EQ(s.codim, 3);
  EXPECT_TRUE(s.lines.empty());
  ASSERT_EQ(s.unresolved.size(), 1u);
  EXPECT_EQ(s.unresolved[0].degree, s.degree);
}

TEST(Surface, CollapsedOrbitFailsFirstStage) {
  FieldPtr f = field_new(4);
  const FieldElem w = FieldElem::gen(f.get()).pow(5);
  SurfaceConfig cfg;
  cfg.a = 4;
  cfg.groups.push_back({{ProjPoint(f, w, FieldElem::one(f.get()), FieldElem::one(f.get())), 4}, 1});
  const auto res = verify_pipeline(cfg);
  EXPECT_EQ(res.outcome, Stage::Orbit);
  EXPECT_FALSE(res.reason.empty());
}

TEST(Surface, WrongSystemDimensionFailsRankStage) {
  SurfaceConfig cfg;
  cfg.a = 3;
  cfg.groups.push_back({{ProjPoint::parse(field_new(7), "t", "t^2", "1"), 7}, 1});
  const auto res = verify_pipeline(cfg);
  EXPECT_EQ(res.outcome, Stage::Rank);
  EXPECT_EQ(res.system_dim, 3u);
}

TEST(Surface, QuinticHitFromSearch) {
  SearchConfig sc;
  sc.a = 4;
  sc.groups = {{2, {1}}, {1, {7}}};
  sc.seed = 1;
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const SurfaceConfig cfg = sample_config(sc, trial);
    const auto res = verify_pipeline(cfg);
    if (res.outcome != Stage::Hit) continue;
    ASSERT_TRUE(res.report);
    const auto& r = *res.report;
    const Invariants inv = invariants_from_multiplicities(4, cfg.multiplicities());
    EXPECT_EQ(inv, (Invariants{5, 2, 1}));
    EXPECT_EQ(r.codim, 2);
    EXPECT_EQ(r.degree, 5);
    EXPECT_EQ(r.genera, (std::vector<std::int64_t>{0, 2, 4}));
    EXPECT_TRUE(r.smooth);
    EXPECT_EQ(res.baselocus_degree, cfg.condition_count());
    const auto cert = certificate(cfg, res);
    EXPECT_EQ(cert.at("outcome"), "HIT");
    EXPECT_EQ(cert.at("surface").at("expected").at("degree"), 5);
    return;
  }
  FAIL() << "no hit among 20 quintic trials";
}

TEST(Surface, InvariantsOfDegree11Configuration) {
  std::vector<int> b{3};
  b.insert(b.end(), 14, 2);
  b.insert(b.end(), 5, 1);
  EXPECT_EQ(invariants_from_multiplicities(9, b), (Invariants{11, 11, -11}));
}

TEST(Surface, StageNames) {
  std::vector<std::string> names;
  for (Stage s : kStages) names.push_back(stage_name(s));
  EXPECT_EQ(names, (std::vector<std::string>{"orbit", "rank", "baselocus", "image", "smooth", "secants", "HIT"}));
}

TEST(Surface, DegenerateFormsHaveCodimThreeImage) {
  const Ideal<F2> img = image_ideal({S("x^2"), S("x*y"), S("y^2"), S("x^2+x*y"), S("x*y+y^2")});
  EXPECT_EQ(codim(img), 3);
  EXPECT_THROW(image_ideal({S("x^2"), S("x*y"), S("y^2")}), MapError);
}
