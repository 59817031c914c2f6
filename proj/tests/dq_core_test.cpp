#include <gtest/gtest.h>

#include "bennett/dq/motion_polynomial.hpp"
#include "bennett/dq/pose.hpp"
#include "bennett/error.hpp"
#include "support/test_support.hpp"

namespace bennett {
namespace {

using test::kDeg;
using test::Rng;

TEST(Quaternion, ProductMatchesEigen) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Quaternion a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Quaternion b{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Eigen::Quaterniond e = Eigen::Quaterniond(a.w, a.x, a.y, a.z) * Eigen::Quaterniond(b.w, b.x, b.y, b.z);
    const Quaternion c = a * b;
    EXPECT_NEAR(c.w, e.w(), 1e-14);
    EXPECT_NEAR(c.x, e.x(), 1e-14);
    EXPECT_NEAR(c.y, e.y(), 1e-14);
    EXPECT_NEAR(c.z, e.z(), 1e-14);
  }
}

TEST(Quaternion, RotationRoundTripThroughEigen) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix3d r = rng.pose().rotation;
    const Quaternion q = quaternion_from_rotation(r);
    EXPECT_GE(q.w, 0.0);
    EXPECT_NEAR(q.norm(), 1.0, 1e-14);
    EXPECT_LT(test::max_abs_diff(rotation_matrix(q), r), 1e-13);
  }
}

DualQuaternion random_dq(Rng& rng) {
  std::array<double, 8> s{};
  for (auto& v : s) v = rng.uniform(-1, 1);
  return DualQuaternion::from_study(s);
}

double max_entry_gap(const DualQuaternion& a, const DualQuaternion& b) {
  const auto x = a.study(), y = b.study();
  double g = 0.0;
  for (int k = 0; k < 8; ++k) g = std::max(g, std::abs(x[k] - y[k]));
  return g;
}

TEST(DualQuaternion, RingAxioms) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const DualQuaternion a = random_dq(rng), b = random_dq(rng), c = random_dq(rng);
    EXPECT_LT(max_entry_gap((a * b) * c, a * (b * c)), 1e-12 * 8);
    EXPECT_LT(max_entry_gap(a * (b + c), a * b + a * c), 1e-12 * 8);
    EXPECT_NEAR((a.primal * b.primal).norm(), a.primal.norm() * b.primal.norm(),
                1e-12 * a.primal.norm() * b.primal.norm());
    // The primal part of a product never sees the dual parts.
    const DualQuaternion a2{a.primal, random_dq(rng).dual};
    EXPECT_EQ((a * b).primal.coeffs(), (a2 * b).primal.coeffs());
  }
}

TEST(DualQuaternion, TrivialProducts) {
  Rng rng(13);
  const DualQuaternion h = random_dq(rng);
  EXPECT_EQ(max_entry_gap(DualQuaternion::identity() * h, h), 0.0);
  const DualQuaternion e1{{}, {0.3, 1, -2, 0.5}}, e2{{}, {1, 0.2, 0.4, -3}};
  EXPECT_EQ(max_entry_gap(e1 * e2, DualQuaternion{}), 0.0);
}

TEST(DualQuaternion, StudyResidualValues) {
  EXPECT_EQ(study_residual(DualQuaternion::from_study({1, 0, 0, 0, 0, 0, 0, 0})), 0.0);
  EXPECT_EQ(study_residual(DualQuaternion::from_study({1, 0, 0, 0, 1, 0, 0, 0})), 1.0);
  const DualQuaternion t1 = dq_from_pose(test::reference_stroke_poses()[1]);
  EXPECT_LT(std::abs(study_residual(t1)), 1e-6);
}

TEST(DualQuaternion, MultiplicationMatchesHomogeneousMatrices) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Pose a = rng.pose(200.0);
    const Pose b = rng.pose(200.0);
    const DualQuaternion ab = dq_from_pose(a) * dq_from_pose(b);
    EXPECT_LT(test::max_abs_diff(test::matrix_of(ab), a.matrix() * b.matrix()), 1e-9);
  }
}

TEST(DualQuaternion, IdentityPoseIsUnitPrimal) {
  const auto s = dq_from_pose(Pose::identity()).study();
  const std::array<double, 8> expected{1, 0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(s[i], expected[i]);
}

TEST(DualQuaternion, PureTranslationConvention) {
  Pose p;
  p.translation = {12.0, 0.0, 0.0};
  const DualQuaternion h = dq_from_pose(p);
  EXPECT_DOUBLE_EQ(h.primal.w, 1.0);
  EXPECT_DOUBLE_EQ(h.primal.vec().norm(), 0.0);
  // Dual part is -t/2 for a pure translation.
  EXPECT_DOUBLE_EQ(h.dual.w, 0.0);
  EXPECT_DOUBLE_EQ(h.dual.x, -6.0);
  EXPECT_DOUBLE_EQ(h.dual.y, 0.0);
  EXPECT_DOUBLE_EQ(h.dual.z, 0.0);
  EXPECT_LT(test::max_abs_diff(dq_to_pose(h).matrix(), p.matrix()), 1e-15);
}

TEST(DualQuaternion, QuarterTurnAboutZ) {
  Pose p;
  p.rotation = Eigen::AngleAxisd(90.0 * kDeg, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const DualQuaternion h = dq_from_pose(p);
  EXPECT_NEAR(h.primal.w, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(h.primal.z, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(h.primal.x, 0.0, 1e-15);
  EXPECT_NEAR(h.dual.norm(), 0.0, 1e-15);
}

TEST(DualQuaternion, PoseRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Pose p = rng.pose(500.0);
    const DualQuaternion h = dq_from_pose(p);
    EXPECT_LT(std::abs(study_residual(h)), 1e-12 * h.squared_length());
    EXPECT_LT(test::max_abs_diff(dq_to_pose(h).matrix(), p.matrix()), 1e-10);
  }
}

TEST(DualQuaternion, ProjectiveScaleDoesNotChangePose) {
  Rng rng(5);
  const Pose p = rng.pose();
  const DualQuaternion h = dq_from_pose(p) * -3.7;
  EXPECT_LT(test::max_abs_diff(dq_to_pose(h).matrix(), p.matrix()), 1e-12);
  EXPECT_LT(test::max_abs_diff(dq_to_pose(dq_from_pose(p) * 5.0).matrix(), p.matrix()), 1e-12);
}

TEST(DualQuaternion, InverseComposesToIdentity) {
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const DualQuaternion h = dq_from_pose(rng.pose()) * rng.uniform(0.5, 3.0);
    const auto s = (h * h.inverse()).study();
    EXPECT_NEAR(s[0], 1.0, 1e-12);
    for (int k = 1; k < 8; ++k) EXPECT_NEAR(s[k], 0.0, 1e-12);
  }
}

TEST(Pose, ReorthogonalizesRoundedRotation) {
  const Pose rounded = test::reference_stroke_poses()[1];
  EXPECT_GT(orthogonality_error(rounded.rotation), 1e-4);
  const Pose back = dq_to_pose(dq_from_pose(rounded));
  EXPECT_LT(orthogonality_error(back.rotation), 1e-12);
  EXPECT_LT(test::max_abs_diff(back.rotation, rounded.rotation), 2e-3);
}

TEST(Pose, RejectsNonRotation) {
  Pose scaled;
  scaled.rotation *= 1.1;
  EXPECT_THROW(dq_from_pose(scaled), Error);
  Pose mirrored;
  mirrored.rotation(2, 2) = -1.0;
  try {
    dq_from_pose(mirrored);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonOrthogonalInput);
  }
}

TEST(Pose, ToleranceContextTightensIngestion) {
  Tolerances strict;
  strict.orthogonality_ingest = 1e-6;
  EXPECT_THROW(dq_from_pose(test::reference_stroke_poses()[1], strict), Error);
}

TEST(Pose, DegenerateAndOffQuadricInputs) {
  const DualQuaternion zero_primal{{0, 0, 0, 0}, {0, 1, 0, 0}};
  try {
    dq_to_pose(zero_primal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePrimal);
  }
  const DualQuaternion off{{1, 0, 0, 0}, {0.5, 0, 0, 0}};
  try {
    dq_to_pose(off);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OffQuadric);
  }
}

MotionPolynomial random_poly(Rng& rng, int degree) {
  std::vector<DualQuaternion> c;
  for (int i = 0; i <= degree; ++i) {
    std::array<double, 8> s{};
    for (auto& v : s) v = rng.uniform(-1, 1);
    c.push_back(DualQuaternion::from_study(s));
  }
  return MotionPolynomial(c);
}

TEST(MotionPolynomial, EvaluationMatchesPowerSum) {
  Rng rng(7);
  const MotionPolynomial c = random_poly(rng, 3);
  const double t = 0.73;
  DualQuaternion direct;
  for (int i = 0; i <= 3; ++i) direct += c[i] * std::pow(t, i);
  const auto a = motionpoly_eval(c, MotionParameter::at(t)).study();
  const auto b = direct.study();
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(a[k], b[k], 1e-14);
  const auto inf = motionpoly_eval(c, MotionParameter::infinity()).study();
  const auto lead = c.leading().study();
  for (int k = 0; k < 8; ++k) EXPECT_EQ(inf[k], lead[k]);
}

TEST(MotionPolynomial, ConstantPolynomial) {
  Rng rng(14);
  const MotionPolynomial c = random_poly(rng, 0);
  for (double t : {-3.0, 0.0, 7.5}) {
    EXPECT_EQ(motionpoly_eval(c, MotionParameter::at(t)).study(), c[0].study());
  }
  const MotionPolynomial prod = motionpoly_multiply(c, MotionPolynomial({DualQuaternion::identity()}));
  EXPECT_EQ(prod[0].study(), c[0].study());
}

TEST(MotionPolynomial, FactorOrderMatters) {
  Rng rng(15);
  const DualQuaternion h = rng.rotation_factor().h, k = rng.rotation_factor().h;
  const MotionPolynomial hk = motionpoly_multiply(linear_factor(h), linear_factor(k));
  const MotionPolynomial kh = motionpoly_multiply(linear_factor(k), linear_factor(h));
  EXPECT_LT(max_entry_gap(hk[1], kh[1]), 1e-14);
  EXPECT_LT(max_entry_gap(hk[0], h * k), 1e-14);
  EXPECT_GT(max_entry_gap(hk[0], kh[0]), 1e-3);
}

TEST(MotionPolynomial, ProductEvaluatesPointwise) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const MotionPolynomial a = random_poly(rng, 2);
    const MotionPolynomial b = random_poly(rng, 1);
    const MotionPolynomial ab = motionpoly_multiply(a, b);
    EXPECT_EQ(ab.degree(), 3);
    const MotionParameter t = MotionParameter::at(rng.uniform(-3, 3));
    const auto lhs = motionpoly_eval(ab, t).study();
    const auto rhs = (motionpoly_eval(a, t) * motionpoly_eval(b, t)).study();
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-12);
  }
}

TEST(MotionPolynomial, DivisionByItselfIsExact) {
  Rng rng(9);
  const DualQuaternion h = rng.rotation_factor().h;
  const MotionDivision d = motionpoly_right_divide(linear_factor(h), linear_factor(h));
  ASSERT_EQ(d.quotient.degree(), 0);
  const auto q = d.quotient[0].study();
  EXPECT_NEAR(q[0], 1.0, 1e-15);
  for (int k = 1; k < 8; ++k) EXPECT_NEAR(q[k], 0.0, 1e-15);
  for (double v : d.remainder[0].study()) EXPECT_NEAR(v, 0.0, 1e-14);
}

TEST(MotionPolynomial, RightDivisionReconstructs) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const MotionPolynomial a = random_poly(rng, 3);
    const MotionPolynomial d = linear_factor(rng.rotation_factor().h);
    const MotionDivision qr = motionpoly_right_divide(a, d);
    EXPECT_EQ(qr.remainder.degree(), 0);
    const MotionPolynomial back = motionpoly_add(motionpoly_multiply(qr.quotient, d), qr.remainder);
    for (int k = 0; k <= 3; ++k) {
      const auto x = back[k].study();
      const auto y = a[k].study();
      for (int j = 0; j < 8; ++j) EXPECT_NEAR(x[j], y[j], 1e-11);
    }
  }
}

TEST(MotionPolynomial, QuadraticDividedByItself) {
  Rng rng(16);
  const MotionPolynomial a =
      motionpoly_multiply(rng.rotation_factor().polynomial(), rng.rotation_factor().polynomial());
  const MotionDivision d = motionpoly_right_divide(a, a);
  ASSERT_EQ(d.quotient.degree(), 0);
  EXPECT_LT(max_entry_gap(d.quotient[0], DualQuaternion::identity()), 1e-14);
  for (const auto& r : d.remainder.coefficients) EXPECT_LT(max_entry_gap(r, DualQuaternion{}), 1e-13);
}

TEST(MotionPolynomial, QuadraticDivisionReconstructs) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const MotionPolynomial a = random_poly(rng, 2);
    const MotionPolynomial d = linear_factor(random_dq(rng));
    const MotionDivision qr = motionpoly_right_divide(a, d);
    const MotionPolynomial back = motionpoly_add(motionpoly_multiply(qr.quotient, d), qr.remainder);
    for (int k = 0; k <= 2; ++k) EXPECT_LT(max_entry_gap(back[k], a[k]), 1e-11);
  }
}

TEST(MotionPolynomial, RejectsDivisorWithoutInvertibleLead) {
  const MotionPolynomial d({DualQuaternion::identity(), DualQuaternion({0, 0, 0, 0}, {0, 1, 0, 0})});
  try {
    motionpoly_right_divide(linear_factor(DualQuaternion::identity()), d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonMonicDivisor);
  }
}

TEST(MotionPolynomial, NormOfMotionIsReal) {
  Rng rng(11);
  const MotionPolynomial c =
      motionpoly_multiply(rng.rotation_factor().polynomial(), rng.rotation_factor().polynomial());
  const MotionPolynomial n = motionpoly_multiply(c, c.conjugate());
  for (const auto& k : n.coefficients) {
    EXPECT_NEAR(k.primal.vec().norm(), 0.0, 1e-10);
    EXPECT_NEAR(k.dual.norm(), 0.0, 1e-9);
  }
  for (double s : study_polynomial(c)) EXPECT_NEAR(s, 0.0, 1e-9);
}

}  // namespace
}  // namespace bennett
