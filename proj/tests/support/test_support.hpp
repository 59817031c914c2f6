#pragma once

#include <Eigen/Geometry>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "bennett/synthesis/linkage.hpp"

namespace bennett::test {

inline constexpr double kDeg = std::numbers::pi / 180.0;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Eigen::Vector3d vec(double scale) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }
  Eigen::Vector3d unit() {
    Eigen::Vector3d v;
    do v = vec(1.0); while (v.norm() < 0.1 || v.norm() > 1.0);
    return v.normalized();
  }
  Pose pose(double reach = 100.0) {
    Pose p;
    p.rotation = Eigen::AngleAxisd(uniform(-std::numbers::pi, std::numbers::pi), unit()).toRotationMatrix();
    p.translation = vec(reach);
    return p;
  }
  // t - h for a revolute joint about a random line.
  RotationFactor rotation_factor(double reach = 50.0) {
    const LinePlucker axis = LinePlucker::through(vec(reach), unit());
    double lambda = uniform(0.3, 2.0) * (uniform(0, 1) < 0.5 ? -1.0 : 1.0);
    return bennett::rotation_factor(axis, uniform(-2.0, 2.0), lambda);
  }

 private:
  std::mt19937_64 gen_;
};

// Homogeneous matrix through Eigen's own quaternion type.
inline Eigen::Matrix4d matrix_of(const DualQuaternion& h) {
  const Eigen::Quaterniond p(h.primal.w, h.primal.x, h.primal.y, h.primal.z);
  const Eigen::Quaterniond q(h.dual.w, h.dual.x, h.dual.y, h.dual.z);
  const double n2 = p.squaredNorm();
  const Eigen::Quaterniond t = q * p.conjugate();
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = p.normalized().toRotationMatrix();
  m.topRightCorner<3, 1>() = -2.0 * t.vec() / n2;
  return m;
}

inline Eigen::Matrix4d dh_link(double theta, double a, double alpha) {
  Eigen::Matrix4d rz = Eigen::Matrix4d::Identity(), tx = Eigen::Matrix4d::Identity(),
                  rx = Eigen::Matrix4d::Identity();
  rz.topLeftCorner<3, 3>() = Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  tx(0, 3) = a;
  rx.topLeftCorner<3, 3>() = Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitX()).toRotationMatrix();
  return rz * tx * rx;
}

// Joint axes (z of each frame) of a serial DH chain starting at `base`.
inline std::array<LinePlucker, 4> dh_chain_axes(const Eigen::Matrix4d& base,
                                                const std::array<double, 4>& theta,
                                                const std::array<double, 4>& a,
                                                const std::array<double, 4>& alpha) {
  std::array<LinePlucker, 4> axes;
  Eigen::Matrix4d f = base;
  for (int i = 0; i < 4; ++i) {
    axes[i] = LinePlucker::through(f.topRightCorner<3, 1>(), f.block<3, 1>(0, 2));
    f = f * dh_link(theta[i], a[i], alpha[i]);
  }
  return axes;
}

// Bennett loop with twists (alpha0, alpha1) of equal sign, closed by
// tan(t0/2) tan(t1/2) = sin((alpha1 + alpha0)/2) / sin((alpha1 - alpha0)/2)
// and theta2 = -theta0, theta3 = -theta1.
struct DhBennett {
  double a0, alpha0, a1, alpha1;
  std::array<double, 4> theta;
  std::array<LinePlucker, 4> axes;
};

inline DhBennett dh_bennett(double a0, double alpha0, double alpha1, double theta0,
                            const Eigen::Matrix4d& base = Eigen::Matrix4d::Identity()) {
  DhBennett b{a0, alpha0, a0 * std::sin(alpha1) / std::sin(alpha0), alpha1, {}, {}};
  const double k = std::sin(0.5 * (alpha1 + alpha0)) / std::sin(0.5 * (alpha1 - alpha0));
  const double theta1 = 2.0 * std::atan(k / std::tan(0.5 * theta0));
  b.theta = {theta0, theta1, -theta0, -theta1};
  b.axes = dh_chain_axes(base, b.theta, {b.a0, b.a1, b.a0, b.a1},
                         {b.alpha0, b.alpha1, b.alpha0, b.alpha1});
  return b;
}

// Poses of the reference stroke design (millimetres).
inline std::array<Pose, 3> reference_stroke_poses() {
  Pose t1, t2;
  t1.rotation << 0.592, -0.103, -0.799, 0.571, 0.753, 0.326, 0.569, -0.649, 0.505;
  t1.translation << 30, 18, -12;
  t2.rotation << 1, 0, 0, 0, 0.28, 0.96, 0, -0.96, 0.28;
  t2.translation << 65, 0, 0;
  return {Pose::identity(), t1, t2};
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace bennett::test
