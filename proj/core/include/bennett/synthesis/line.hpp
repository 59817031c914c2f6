#pragma once

#include <Eigen/Core>

#include "bennett/dq/dual_quaternion.hpp"
#include "bennett/dq/pose.hpp"
#include "bennett/dq/tolerance.hpp"

namespace bennett {

// Oriented line with unit direction d and moment m = x × d for any point x on it.
struct LinePlucker {
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d moment = Eigen::Vector3d::Zero();

  static LinePlucker through(const Eigen::Vector3d& point, const Eigen::Vector3d& dir);

  // Point of the line closest to the origin.
  Eigen::Vector3d anchor() const { return direction.cross(moment); }
  Eigen::Vector3d project(const Eigen::Vector3d& x) const;
  double distance_to(const Eigen::Vector3d& x) const { return (x - project(x)).norm(); }
  LinePlucker reversed() const { return {-direction, -moment}; }
  LinePlucker transformed(const Pose& pose) const;
  // |d| - 1 and d.m, whichever is larger in magnitude.
  double invariant_residual() const;
};

// Pure dual quaternion (0, d) + eps (0, -m) for the half-turn about the line.
DualQuaternion line_to_dq(const LinePlucker& l);

// d_a . m_b + d_b . m_a; zero iff the lines meet or are parallel.
double reciprocal_product(const LinePlucker& a, const LinePlucker& b);

struct CommonPerpendicular {
  Eigen::Vector3d foot_first;   // on the first line
  Eigen::Vector3d foot_second;  // on the second line
  Eigen::Vector3d normal;       // unit, from first foot to second (or d1 × d2 when they meet)
  double distance = 0.0;
  double twist = 0.0;           // signed angle from d1 to d2 about normal, (-pi, pi]
  bool parallel = false;
  bool intersecting = false;
};

// For parallel lines the perpendicular is not unique; the one through the
// projection of `reference` onto the first line is returned.
CommonPerpendicular common_perpendicular(const LinePlucker& a, const LinePlucker& b,
                                         const Eigen::Vector3d& reference,
                                         const Tolerances& tol = {});

}  // namespace bennett
