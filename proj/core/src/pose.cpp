#include "bennett/dq/pose.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

#include "bennett/error.hpp"

namespace bennett {

Pose Pose::from_matrix(const Eigen::Matrix4d& m) {
  Pose p;
  p.rotation = m.topLeftCorner<3, 3>();
  p.translation = m.topRightCorner<3, 1>();
  return p;
}

Eigen::Matrix4d Pose::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Pose Pose::inverse() const {
  Pose p;
  p.rotation = rotation.transpose();
  p.translation = -(p.rotation * translation);
  return p;
}

Pose Pose::operator*(const Pose& o) const {
  Pose p;
  p.rotation = rotation * o.rotation;
  p.translation = rotation * o.translation + translation;
  return p;
}

double orthogonality_error(const Eigen::Matrix3d& r) {
  if (!r.allFinite() || r.determinant() <= 0.0) return std::numeric_limits<double>::infinity();
  return (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& r) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  const Eigen::Matrix3d v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) u.col(2) *= -1.0;
  return u * v.transpose();
}

DualQuaternion dq_from_pose(const Pose& pose, const Tolerances& tol) {
  const double before = orthogonality_error(pose.rotation);
  if (!(before <= tol.orthogonality_ingest) || !pose.translation.allFinite()) {
    std::ostringstream msg;
    msg << "rotation block is not a proper rotation (|R^T R - I| = " << before << ")";
    throw Error(ErrorCode::NonOrthogonalInput, msg.str());
  }
  const Eigen::Matrix3d r = nearest_rotation(pose.rotation);
  if (orthogonality_error(r) > tol.orthogonality) {
    throw Error(ErrorCode::NonOrthogonalInput, "re-orthogonalization did not converge");
  }
  const Quaternion p = quaternion_from_rotation(r);
  // Translation enters the dual part as -t p / 2.
  const Quaternion q = Quaternion::pure(pose.translation) * p * -0.5;
  return {p, q};
}

Pose dq_to_pose(const DualQuaternion& h, const Tolerances& tol) {
  const double len2 = h.squared_length();
  const double p2 = h.primal.norm_squared();
  if (!(len2 > 0.0) || p2 <= tol.degenerate_primal * tol.degenerate_primal * len2) {
    throw Error(ErrorCode::DegeneratePrimal, "dual quaternion has a vanishing primal part");
  }
  if (std::abs(study_residual(h)) > tol.study * len2) {
    throw Error(ErrorCode::OffQuadric, "dual quaternion is not on the Study quadric");
  }
  Pose pose;
  pose.rotation = rotation_matrix(h.primal);
  pose.translation = (h.dual * h.primal.conjugate()).vec() * (-2.0 / p2);
  return pose;
}

}  // namespace bennett
