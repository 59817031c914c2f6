#pragma once

#include <Eigen/Core>

#include "bennett/dq/dual_quaternion.hpp"
#include "bennett/dq/tolerance.hpp"

namespace bennett {

// Proper rigid transform; translation in millimetres.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }
  // Top 3x4 block of a homogeneous matrix; the bottom row is ignored.
  static Pose from_matrix(const Eigen::Matrix4d& m);
  Eigen::Matrix4d matrix() const;

  Eigen::Vector3d apply(const Eigen::Vector3d& point) const {
    return rotation * point + translation;
  }
  Pose inverse() const;
  Pose operator*(const Pose& o) const;
};

// max |R^T R - I|, with +inf for det(R) <= 0.
double orthogonality_error(const Eigen::Matrix3d& r);
// Closest rotation in the Frobenius sense (SVD, determinant forced to +1).
Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& r);

// Rejects with NonOrthogonalInput when the rotation block is further than
// tol.orthogonality_ingest from SO(3); otherwise re-orthogonalizes first.
DualQuaternion dq_from_pose(const Pose& pose, const Tolerances& tol = {});
// Inverse map. DegeneratePrimal when p vanishes, OffQuadric when p.q != 0.
Pose dq_to_pose(const DualQuaternion& h, const Tolerances& tol = {});

}  // namespace bennett
