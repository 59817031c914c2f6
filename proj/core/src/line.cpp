#include "bennett/synthesis/line.hpp"

#include <algorithm>
#include <cmath>

namespace bennett {

LinePlucker LinePlucker::through(const Eigen::Vector3d& point, const Eigen::Vector3d& dir) {
  const Eigen::Vector3d d = dir.normalized();
  return {d, point.cross(d)};
}

Eigen::Vector3d LinePlucker::project(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d a = anchor();
  return a + direction * direction.dot(x - a);
}

LinePlucker LinePlucker::transformed(const Pose& pose) const {
  return through(pose.apply(anchor()), pose.rotation * direction);
}

double LinePlucker::invariant_residual() const {
  return std::max(std::abs(direction.norm() - 1.0), std::abs(direction.dot(moment)));
}

DualQuaternion line_to_dq(const LinePlucker& l) {
  return {Quaternion::pure(l.direction), Quaternion::pure(-l.moment)};
}

double reciprocal_product(const LinePlucker& a, const LinePlucker& b) {
  return a.direction.dot(b.moment) + b.direction.dot(a.moment);
}

CommonPerpendicular common_perpendicular(const LinePlucker& a, const LinePlucker& b,
                                         const Eigen::Vector3d& reference,
                                         const Tolerances& tol) {
  CommonPerpendicular cp;
  const Eigen::Vector3d& d1 = a.direction;
  const Eigen::Vector3d& d2 = b.direction;
  const Eigen::Vector3d c = d1.cross(d2);
  const double c2 = c.squaredNorm();

  if (std::sqrt(c2) < tol.parallel) {
    cp.parallel = true;
    cp.foot_first = a.project(reference);
    cp.foot_second = b.project(cp.foot_first);
  } else {
    const Eigen::Vector3d p1 = a.anchor();
    const Eigen::Vector3d p2 = b.anchor();
    const Eigen::Vector3d w = p2 - p1;
    cp.foot_first = p1 + d1 * (w.cross(d2).dot(c) / c2);
    cp.foot_second = p2 + d2 * (w.cross(d1).dot(c) / c2);
  }

  const Eigen::Vector3d gap = cp.foot_second - cp.foot_first;
  cp.distance = gap.norm();
  cp.intersecting = cp.distance < tol.intersect_mm;
  if (!cp.intersecting) {
    cp.normal = gap / cp.distance;
  } else if (!cp.parallel) {
    cp.normal = c.normalized();
  } else {
    // Coincident lines; any perpendicular will do.
    cp.normal = d1.unitOrthogonal();
  }
  cp.twist = std::atan2(c.dot(cp.normal), d1.dot(d2));
  return cp;
}

}  // namespace bennett
