#include <gtest/gtest.h>

#include <random>

#include "zcover/construction.hpp"
#include "zcover/curve_oracle.hpp"
#include "zcover/report.hpp"

using namespace zcover;

namespace {

// Naive count of solutions to y^2 = x^3 + a x + b, plus infinity.
std::int64_t naive_count(std::int64_t p, std::int64_t a, std::int64_t b) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if (detail::mod(y * y - (x * x * x + a * x + b), p) == 0) ++n;
  return n;
}

}  // namespace

TEST(CurveOracle, PointCounts) {
  EXPECT_EQ(naive_count(7, -1, 0), 8);
  EXPECT_EQ(naive_count(5, -1, 0), 8);
  EXPECT_EQ(group_structure(CurveOverFp(7, -1, 0)).order, 8);
  EXPECT_EQ(group_structure(CurveOverFp(5, -1, 0)).order, 8);
  for (std::int64_t p : {11, 13, 17, 19, 23, 101})
    for (std::int64_t a = 0; a < 4; ++a)
      for (std::int64_t b = 0; b < 4; ++b) {
        if (detail::mod(4 * a * a * a + 27 * b * b, p) == 0) continue;
        const CurveOverFp c(p, a, b);
        const auto g = group_structure(c);
        EXPECT_EQ(g.order, naive_count(p, a, b));
        EXPECT_EQ(g.d2 % g.d1, 0);
        EXPECT_EQ(g.d1 * g.d2, g.order);
        if (c.has_full_two_torsion()) { EXPECT_EQ(g.order % 4, 0); }
      }
}

TEST(CurveOracle, DefaultCurveStructure) {
  const CurveOverFp c(8311, -1, 0);
  EXPECT_TRUE(c.has_full_two_torsion());
  const auto g = group_structure(c);
  EXPECT_EQ(g.order, 8312);
  EXPECT_EQ(g.d1, 2);
  EXPECT_EQ(g.d2, 4156);
}

TEST(CurveOracle, RejectsBadCurves) {
  EXPECT_THROW(CurveOverFp(9, 1, 1), OracleError);
  EXPECT_THROW(CurveOverFp(7, 0, 0), OracleError);
  EXPECT_THROW(group_structure(CurveOverFp(10007, -1, 0)), OracleError);
}

TEST(CurveOracle, GroupLaw) {
  const CurveOverFp c(101, 2, 3);
  const auto pts = c.points();
  const auto O = CurvePoint::at_infinity();
  for (const auto& P : pts) {
    EXPECT_TRUE(c.contains(P));
    EXPECT_EQ(c.add(P, O), P);
    EXPECT_EQ(c.add(P, c.negate(P)), O);
    if (!P.infinity && P.y == 0) { EXPECT_EQ(c.twice(P), O); }
  }
  const auto N = static_cast<std::int64_t>(pts.size());
  for (const auto& P : pts) EXPECT_TRUE(c.multiply(N, P).infinity);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto &P = pts[pick(rng)], &Q = pts[pick(rng)], &R = pts[pick(rng)];
    EXPECT_EQ(c.add(c.add(P, Q), R), c.add(P, c.add(Q, R)));
    EXPECT_EQ(c.add(P, Q), c.add(Q, P));
    EXPECT_TRUE(c.contains(c.add(P, Q)));
  }
}

TEST(CurveOracle, HalvingsOnFullTwoTorsionCurve) {
  const CurveOverFp c(8311, -1, 0);
  const auto pts = c.points();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto P = pts[pick(rng)], Q = pts[pick(rng)];
    const auto target = c.add(c.twice(P), Q);
    const auto halves = curve_halvings(c, pts, c.add(target, target));
    EXPECT_EQ(halves.size(), 4u);
  }
}

TEST(CurveOracle, RealizesFamily) {
  const auto bd = construct_family(3);
  const CurveOverFp c(8311, -1, 0);
  const auto audit = audit_elements(bd);
  const auto asg = search_assignment(c, bd.group_spec, audit);
  const auto rels = family_point_relations(bd);
  const auto r = realize(bd, c, asg, rels);
  EXPECT_TRUE(r.ok()) << (r.discrepancies.empty() ? "" : r.discrepancies.front());
  EXPECT_TRUE(r.injective());
  EXPECT_EQ(r.relations.size(), 28u);
  EXPECT_TRUE(r.all_relations_realized());
  for (const auto& p : r.points) {
    EXPECT_TRUE(p.realized_holds) << p.name;
    if (p.halves) {
      EXPECT_EQ(*p.halves, 4u);
      EXPECT_TRUE(*p.among_halves);
    }
  }
}

TEST(CurveOracle, TorsionImageOfWrongOrder) {
  const auto bd = construct_family(3);
  const CurveOverFp c(8311, -1, 0);
  auto asg = search_assignment(c, bd.group_spec, audit_elements(bd));
  const auto pts = c.points();
  const auto N = static_cast<std::int64_t>(pts.size());
  const auto order4 = std::find_if(pts.begin(), pts.end(), [&](const CurvePoint& P) { return point_order(c, P, N) == 4; });
  ASSERT_NE(order4, pts.end());
  asg.torsion_images[0] = *order4;
  EXPECT_THROW(realize(bd, c, asg), OracleError);
}

TEST(CurveOracle, CollapsedAssignmentBreaksInjectivity) {
  const auto bd = construct_family(3);
  const CurveOverFp c(8311, -1, 0);
  auto asg = search_assignment(c, bd.group_spec, audit_elements(bd));
  for (auto& P : asg.free_images) P = CurvePoint::at_infinity();
  const auto r = realize(bd, c, asg, family_point_relations(bd));
  EXPECT_FALSE(r.injective());
  EXPECT_FALSE(r.ok());
}

TEST(CurveOracle, MutationsAreRejectedOnTheCurve) {
  const auto good = construct_family(3);
  const CurveOverFp c(8311, -1, 0);
  std::vector<BuildingData> instances{good};
  for (auto chi : nontrivial_characters(3))
    for (int code = 1; code <= 3; ++code) {
      auto bd = good;
      bd.L[chi] = bd.L[chi] + SurfaceClass{0, {0, family::two_torsion(bd.group_spec, code)}};
      instances.push_back(bd);
    }
  std::vector<GroupElement> audit;
  for (const auto& bd : instances) {
    const auto a = audit_elements(bd);
    audit.insert(audit.end(), a.begin(), a.end());
  }
  const auto asg = search_assignment(c, good.group_spec, audit);
  for (std::size_t i = 1; i < instances.size(); ++i) {
    const auto r = realize(instances[i], c, asg);
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.all_relations_realized()) << i;
  }
}

TEST(CurveOracle, RunOracleFromReport) {
  const auto r = run_oracle(construct_family(4), OracleOptions{});
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.all_relations_realized());
}
