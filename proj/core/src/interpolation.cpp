#include "bennett/synthesis/interpolation.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "bennett/error.hpp"

namespace bennett {

namespace {

Eigen::Matrix<double, 8, 1> as_vector(const DualQuaternion& h) {
  const auto s = h.study();
  return Eigen::Matrix<double, 8, 1>(s.data());
}

}  // namespace

MotionPolynomial interpolate_three_poses(const DualQuaternion& x0, const DualQuaternion& x1,
                                         const DualQuaternion& x2, const Tolerances& tol) {
  Eigen::Matrix<double, 8, 3> span;
  span.col(0) = as_vector(x0.normalized());
  span.col(1) = as_vector(x1.normalized());
  span.col(2) = as_vector(x2.normalized());
  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 3>> svd(span);
  const auto sv = svd.singularValues();
  if (sv[2] <= tol.rank * sv[0]) {
    throw Error(ErrorCode::CollinearPoses, "the three poses are projectively collinear");
  }

  const double b01 = study_bilinear(x0, x1);
  const double b02 = study_bilinear(x0, x2);
  const double b12 = study_bilinear(x1, x2);
  const double scale01 = std::sqrt(x0.squared_length() * x1.squared_length());
  const double scale02 = std::sqrt(x0.squared_length() * x2.squared_length());
  const double scale12 = std::sqrt(x1.squared_length() * x2.squared_length());
  if (std::abs(b12) <= tol.invertible * scale12 || std::abs(b01) <= tol.invertible * scale01 ||
      std::abs(b02) <= tol.invertible * scale02) {
    throw Error(ErrorCode::NoBennettMotion,
                "the poses admit no quadratic motion with the requested parameters");
  }
  const double alpha = b02 / b12;
  const double beta = b01 / b12;

  MotionPolynomial c({x2 * beta, x1 * alpha - x0 - x2 * beta, x0});

  double worst = 0.0;
  for (double s : study_polynomial(c)) worst = std::max(worst, std::abs(s));
  double size = 0.0;
  for (const auto& k : c.coefficients) size = std::max(size, k.squared_length());
  if (worst > tol.study * size) {
    throw Error(ErrorCode::NoBennettMotion, "interpolating curve leaves the Study quadric");
  }
  return c;
}

MotionPolynomial interpolate_three_poses(const Pose& t0, const Pose& t1, const Pose& t2,
                                         const Tolerances& tol) {
  return interpolate_three_poses(dq_from_pose(t0, tol), dq_from_pose(t1, tol),
                                 dq_from_pose(t2, tol), tol);
}

}  // namespace bennett
