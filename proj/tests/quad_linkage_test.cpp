#include <gtest/gtest.h>

#include "bennett/error.hpp"
#include "bennett/kinematics/loop.hpp"
#include "bennett/quad/quad_linkage.hpp"
#include "support/test_support.hpp"

namespace bennett {
namespace {

using test::kDeg;

const QuadSpec kReference{80.0, 0.5, {10.0, 40.0, -50.0}, 10.0 * kDeg};

// Frozen from tests/oracles/oracles.py.
constexpr double kAlpha1Deg = 20.322037016506;
const Eigen::Vector3d kP2(160.0, 93.891854213, 37.510217095);
const Eigen::Vector3d kP3(166.169916771, -12.339833542, -18.310851111);
constexpr double kExpandedArea = 16118.398046019;
constexpr double kFoldedArea = 8657.380995831;

TEST(PlanarQuad, ExpandedAndFoldedPoints) {
  const PlanarQuads q = build_planar_quad(kReference);
  const std::array<Eigen::Vector3d, 4> expanded{Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, 80, 10),
                                                Eigen::Vector3d(160, 80, 40), Eigen::Vector3d(160, 0, -50)};
  const std::array<Eigen::Vector3d, 4> folded{Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, 80, 10),
                                              Eigen::Vector3d(0, 240, 40), Eigen::Vector3d(0, 160, -50)};
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT((q.expanded.points[i] - expanded[i]).norm(), 1e-12) << i;
    EXPECT_LT((q.folded.points[i] - folded[i]).norm(), 1e-12) << i;
  }
  EXPECT_EQ(q.expanded.label, ConfigurationLabel::Expanded);
  EXPECT_EQ(q.folded.label, ConfigurationLabel::Folded);
}

TEST(PlanarQuad, ZeroOffsets) {
  const PlanarQuads q = build_planar_quad(QuadSpec{80, 0.5, {0, 0, 0}, 0});
  for (const auto& p : q.expanded.points) EXPECT_EQ(p.z(), 0.0);
  EXPECT_LT((q.expanded.points[2] - Eigen::Vector3d(160, 80, 0)).norm(), 1e-12);
  // Folded quad degenerates to a segment on the y axis.
  for (const auto& p : q.folded.points) EXPECT_LT(std::hypot(p.x(), p.z()), 1e-12);
  EXPECT_NEAR(quad_area(q.folded.points), 0.0, 1e-12);
}

TEST(PlanarQuad, LinkLengthsInProjection) {
  test::Rng rng(82);
  for (int i = 0; i < 50; ++i) {
    const QuadSpec s{rng.uniform(10, 100), rng.uniform(0.1, 1.0),
                     {rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)}, 0.0};
    const PlanarQuads q = build_planar_quad(s);
    for (const auto* c : {&q.expanded, &q.folded}) {
      const auto xy = [&](int a, int b) { return (c->points[a] - c->points[b]).head<2>().norm(); };
      EXPECT_NEAR(xy(1, 0), s.a0, 1e-12);
      EXPECT_NEAR(xy(2, 1), s.a1(), 1e-12);
      EXPECT_NEAR(xy(3, 0), s.a1(), 1e-12);
      EXPECT_EQ(c->points[0], Eigen::Vector3d::Zero());
      EXPECT_EQ(c->points[1], Eigen::Vector3d(0, s.a0, s.z[0]));
    }
  }
}

TEST(TwistedQuad, ZeroTwistKeepsPlanarQuad) {
  QuadSpec s = kReference;
  s.alpha0 = 0.0;
  const TwistedQuad q = apply_twist(s);
  EXPECT_EQ(q.alpha1, 0.0);
  const PlanarQuads p = build_planar_quad(s);
  for (int i = 0; i < 4; ++i) EXPECT_LT((q.points[i] - p.expanded.points[i]).norm(), 1e-12);
  for (const auto& a : q.axes) EXPECT_LT((a.direction - Eigen::Vector3d::UnitZ()).norm(), 1e-12);
}

TEST(TwistedQuad, TwistLaw) {
  const TwistedQuad q = apply_twist(kReference);
  EXPECT_NEAR(q.alpha1 / kDeg, kAlpha1Deg, 1e-9);
  EXPECT_NEAR(q.alpha1 / kDeg, 20.32, 0.05);
  // sin(alpha1) = sin(alpha0) / ratio
  EXPECT_NEAR(std::sin(q.alpha1), std::sin(kReference.alpha0) / kReference.bennett_ratio, 1e-14);
}

TEST(TwistedQuad, PointsMatchOracle) {
  const TwistedQuad q = apply_twist(kReference);
  EXPECT_LT((q.points[0] - Eigen::Vector3d(0, 0, 0)).norm(), 1e-12);
  EXPECT_LT((q.points[1] - Eigen::Vector3d(0, 80, 10)).norm(), 1e-12);
  EXPECT_LT((q.points[2] - kP2).norm(), 1e-8);
  EXPECT_LT((q.points[3] - kP3).norm(), 1e-8);
}

TEST(TwistedQuad, PreservesLinkGeometry) {
  const TwistedQuad q = apply_twist(kReference);
  const DhExtraction x = axes_to_dh(q.axes);
  EXPECT_NEAR(x.dh.a0, 80.0, 1e-9);
  EXPECT_NEAR(x.dh.a1, 160.0, 1e-9);
  EXPECT_NEAR(std::abs(x.dh.alpha0), 10.0 * kDeg, 1e-12);
  EXPECT_NEAR(std::abs(x.dh.alpha1), q.alpha1, 1e-12);
  EXPECT_LT(x.max_offset, 1e-9);
  // Each point stays at its offset from its joint centre along its axis.
  for (int i = 0; i < 4; ++i) EXPECT_LT(q.axes[i].distance_to(q.points[i]), 1e-9) << i;
}

TEST(TwistedQuad, RejectsInfeasibleTwist) {
  QuadSpec s = kReference;
  s.bennett_ratio = 0.1;
  s.alpha0 = 30.0 * kDeg;
  try {
    apply_twist(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TwistInfeasible);
  }
}

TEST(QuadSpec, Validation) {
  for (QuadSpec s : {QuadSpec{-1, 0.5, {}, 0.1}, QuadSpec{80, 0.0, {}, 0.1}, QuadSpec{80, 1.5, {}, 0.1},
                     QuadSpec{80, 0.5, {std::nan(""), 0, 0}, 0.1}}) {
    try {
      s.validate();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
    }
  }
  EXPECT_NO_THROW(kReference.validate());
}

TEST(QuadArea, DiagonalFormula) {
  const PlanarQuads q = build_planar_quad(QuadSpec{80, 0.5, {0, 0, 0}, 0});
  EXPECT_DOUBLE_EQ(quad_area(q.expanded.points), 12800.0);
  EXPECT_NEAR(quad_area(apply_twist(kReference).points), kExpandedArea, 1e-6);
}

double triangulated_area(const std::array<Eigen::Vector3d, 4>& p) {
  const auto tri = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
    return 0.5 * (b - a).cross(c - a).norm();
  };
  return 0.5 * (tri(p[0], p[1], p[2]) + tri(p[0], p[2], p[3]) + tri(p[1], p[2], p[3]) + tri(p[1], p[3], p[0]));
}

TEST(QuadArea, AgreesWithTriangulationWhenNearlyPlanar) {
  test::Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    const double a0 = rng.uniform(20, 100);
    const QuadSpec s{a0, rng.uniform(0.2, 1.0),
                     {rng.uniform(-0.02, 0.02) * a0, rng.uniform(-0.02, 0.02) * a0, rng.uniform(-0.02, 0.02) * a0},
                     0.0};
    const auto p = build_planar_quad(s).expanded.points;
    EXPECT_NEAR(quad_area(p), triangulated_area(p), 0.01 * triangulated_area(p));
  }
}

TEST(QuadArea, NeverExceedsTriangulation) {
  // The diagonal formula is the projected (vector) area of a skew quad.
  for (const auto& p : {build_planar_quad(kReference).expanded.points, apply_twist(kReference).points}) {
    EXPECT_LE(quad_area(p), triangulated_area(p));
  }
}

TEST(FoldingLinkage, ReferenceDhAndFold) {
  const TwistedQuad q = apply_twist(kReference);
  const BennettLinkage l = quad_to_linkage(q, kReference);
  EXPECT_EQ(l.base_link, 0);
  EXPECT_NEAR(l.dh.a0, 80.0, 1e-9);
  EXPECT_NEAR(l.dh.alpha0 / kDeg, 10.0, 1e-9);
  EXPECT_NEAR(l.dh.a1, 160.0, 1e-9);
  EXPECT_NEAR(l.dh.alpha1 / kDeg, -kAlpha1Deg, 1e-9);
  EXPECT_LT(check_bennett_condition(l.dh), 1e-9);

  const FoldedSearch f = find_folded_configuration(l);
  ASSERT_TRUE(f.found);
  EXPECT_LT(f.transversal_gap, 1e-9);
  EXPECT_NEAR(quad_area(l.attachments), kExpandedArea, 1e-6);
  EXPECT_NEAR(f.area, kFoldedArea, 1e-5);
  EXPECT_NEAR(f.area / quad_area(l.attachments), 0.537111750877, 1e-9);
}

TEST(FoldingLinkage, PlanarLinkagePassesThroughBothQuads) {
  QuadSpec s = kReference;
  s.alpha0 = 0.0;
  const BennettLinkage l = quad_to_linkage(apply_twist(s), s);
  const PlanarQuads q = build_planar_quad(s);
  for (int i = 0; i < 4; ++i) EXPECT_LT((l.attachments[i] - q.expanded.points[i]).norm(), 1e-9);
  const FoldedSearch f = find_folded_configuration(l);
  ASSERT_TRUE(f.found);
  const LoopConfiguration c = configuration_at(l, f.t);
  for (int i = 0; i < 4; ++i) EXPECT_LT((c.attachments[i] - q.folded.points[i]).norm(), 1e-6) << i;
}

TEST(FoldingLinkage, RandomSpecsGiveBennettLoops) {
  test::Rng rng(81);
  for (int i = 0; i < 200; ++i) {
    QuadSpec s;
    s.a0 = rng.uniform(20, 120);
    s.bennett_ratio = rng.uniform(0.2, 0.95);
    s.z = {rng.uniform(-60, 60), rng.uniform(-60, 60), rng.uniform(-60, 60)};
    s.alpha0 = rng.uniform(1.0, 0.9 * std::asin(s.bennett_ratio) / kDeg) * kDeg;
    const TwistedQuad q = apply_twist(s);
    const BennettLinkage l = quad_to_linkage(q, s);
    EXPECT_NEAR(l.dh.a0, s.a0, 1e-9);
    EXPECT_NEAR(l.dh.a1, s.a1(), 1e-9);
    EXPECT_NEAR(l.dh.alpha0, s.alpha0, 1e-9);
    EXPECT_NEAR(l.dh.alpha1, -q.alpha1, 1e-9);
    EXPECT_LT(check_bennett_condition(l.dh), 1e-9) << i;
  }
}

}  // namespace
}  // namespace bennett
