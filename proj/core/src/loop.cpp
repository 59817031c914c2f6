#include "bennett/kinematics/loop.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <vector>

#include "bennett/error.hpp"
#include "bennett/quad/quad_linkage.hpp"

namespace bennett {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::Matrix4d rot_z(double a) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 0) = std::cos(a); m(0, 1) = -std::sin(a);
  m(1, 0) = std::sin(a); m(1, 1) = std::cos(a);
  return m;
}

Eigen::Matrix4d rot_x(double a) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(1, 1) = std::cos(a); m(1, 2) = -std::sin(a);
  m(2, 1) = std::sin(a); m(2, 2) = std::cos(a);
  return m;
}

Eigen::Matrix4d trans_x(double a) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 3) = a;
  return m;
}

std::array<Eigen::Vector3d, 4> moved(const BennettLinkage& link,
                                     const std::array<Eigen::Vector3d, 4>& pts, const Pose& d) {
  std::array<Eigen::Vector3d, 4> out = pts;
  out[link.moving_a()] = d.apply(pts[link.moving_a()]);
  out[link.moving_b()] = d.apply(pts[link.moving_b()]);
  return out;
}

FoldDetection collinearity(const std::array<Eigen::Vector3d, 4>& centres, const Tolerances& tol) {
  Eigen::Matrix<double, 4, 3> m;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& c : centres) mean += c / 4.0;
  for (int i = 0; i < 4; ++i) m.row(i) = (centres[i] - mean).transpose();
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(m);
  const auto sv = svd.singularValues();
  FoldDetection out;
  if (sv[0] <= tol.intersect_mm) {
    out.degenerate = true;
    out.is_folded = true;
    return out;
  }
  out.transversal_gap = sv[1] / sv[0];
  out.is_folded = out.transversal_gap < tol.folded_gap;
  return out;
}

}  // namespace

Pose displacement_at(const BennettLinkage& link, MotionParameter t, const Tolerances& tol) {
  return dq_to_pose(motionpoly_eval(link.motion, t), tol);
}

DualQuaternion coupler_pose(const BennettLinkage& link, MotionParameter t, const Tolerances& tol) {
  const DualQuaternion h = motionpoly_eval(link.motion, t) * link.home_coupler;
  (void)dq_to_pose(h, tol);
  return h.normalized();
}

double drive_angle(const BennettLinkage& link, MotionParameter t) {
  return cycle_angle(link.chain_a[0], t);
}

MotionParameter parameter_at_drive_angle(const BennettLinkage& link, double chi) {
  return parameter_at_cycle_angle(link.chain_a[0], chi);
}

LoopConfiguration configuration_at(const BennettLinkage& link, MotionParameter t,
                                   const Tolerances& tol) {
  const Pose d = displacement_at(link, t, tol);
  LoopConfiguration cfg;
  cfg.t = t;
  cfg.axes = link.axes;
  cfg.axes[link.moving_a()] = link.axes[link.moving_a()].transformed(d);
  cfg.axes[link.moving_b()] = link.axes[link.moving_b()].transformed(d);
  cfg.joint_centers = moved(link, link.joint_centers, d);
  cfg.attachments = moved(link, link.attachments, d);
  cfg.joint_angles = dh_joint_angles(axes_to_dh(cfg.axes, tol), cfg.axes);
  return cfg;
}

double closure_residual(const BennettLinkage& link, const std::array<double, 4>& joint_angles) {
  Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
  for (int i = 0; i < 4; ++i) {
    t = t * rot_z(joint_angles[i]) * trans_x(link.dh.length(i)) * rot_x(link.dh.twist(i));
  }
  return (t - Eigen::Matrix4d::Identity()).norm();
}

FoldDetection detect_folded(const BennettLinkage& link, MotionParameter t, const Tolerances& tol) {
  return collinearity(moved(link, link.joint_centers, displacement_at(link, t, tol)), tol);
}

FoldedSearch find_folded_configuration(const BennettLinkage& link, const Tolerances& tol) {
  const auto gap_at = [&](double chi) {
    return detect_folded(link, parameter_at_drive_angle(link, chi), tol).transversal_gap;
  };

  constexpr int kSamples = 720;
  std::vector<double> gaps(kSamples);
  for (int i = 0; i < kSamples; ++i) gaps[i] = gap_at(kTwoPi * i / kSamples);

  FoldedSearch best;
  double best_stretch = -1.0;
  for (int i = 0; i < kSamples; ++i) {
    const double g = gaps[i];
    if (g > gaps[(i + kSamples - 1) % kSamples] || g > gaps[(i + 1) % kSamples]) continue;

    // Golden-section refinement inside the bracketing samples.
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = kTwoPi * (i - 1) / kSamples;
    double hi = kTwoPi * (i + 1) / kSamples;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = gap_at(x1), f2 = gap_at(x2);
    for (int iter = 0; iter < 80; ++iter) {
      if (f1 < f2) {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - phi * (hi - lo); f1 = gap_at(x1);
      } else {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + phi * (hi - lo); f2 = gap_at(x2);
      }
    }
    double chi = f1 < f2 ? x1 : x2;
    const double gap = std::min({f1, f2, g});
    if (gap == g) chi = kTwoPi * i / kSamples;
    if (gap >= tol.folded_gap) continue;

    chi = std::fmod(chi + kTwoPi, kTwoPi);
    const MotionParameter t = parameter_at_drive_angle(link, chi);
    const LoopConfiguration cfg = configuration_at(link, t, tol);
    const double stretch =
        (cfg.joint_centers[link.moving_a()] - cfg.joint_centers[link.fixed_b()]).norm();
    if (stretch > best_stretch + 1e-9) {
      best_stretch = stretch;
      best = {true, t, chi, gap, quad_area(cfg.attachments)};
    }
  }
  return best;
}

}  // namespace bennett
