#pragma once

#include <array>
#include <optional>

#include "bennett/synthesis/bennett_dh.hpp"
#include "bennett/synthesis/factorization.hpp"

namespace bennett {

// Four revolute axes in loop order at the home configuration (t = inf).
// Link i joins axes[i] and axes[i+1]. The base link is `base_link`; its two
// axes are fixed and the opposite link is the coupler.
//
//   chain_a: fixed axes[b+1], then moving axes[b+2]
//   chain_b: fixed axes[b],   then moving axes[b+3]
//
// Both chains multiply to `motion`, the coupler displacement from home.
struct BennettLinkage {
  std::array<LinePlucker, 4> axes;
  BennettDH dh;
  DualQuaternion home_coupler = DualQuaternion::identity();
  int base_link = 3;
  // Feet of the common normals on each axis, home configuration.
  std::array<Eigen::Vector3d, 4> joint_centers;
  // Attachment point carried by each axis (mm, home configuration).
  std::array<Eigen::Vector3d, 4> attachments;
  MotionPolynomial motion;
  Factorization chain_a;
  Factorization chain_b;

  int fixed_a() const { return (base_link + 1) % 4; }
  int moving_a() const { return (base_link + 2) % 4; }
  int moving_b() const { return (base_link + 3) % 4; }
  int fixed_b() const { return base_link; }
  bool is_fixed(int axis) const { return axis == fixed_a() || axis == fixed_b(); }
  // Coupler pose including the home frame.
  MotionPolynomial coupler_motion() const;
};

// Linkage traced by a quadratic motion. Axes are ordered [h1, h2, k2, k1] from
// factorizations a = (h1, h2) and b = (k1, k2); attachments are the joint centres.
BennettLinkage linkage_from_motion(const MotionPolynomial& c, const Tolerances& tol = {});

// Linkage from four axes. Without a motion, both factor chains are rebuilt
// from the line geometry (NotBennett if that fails); with one, its
// factorizations are matched against the axes.
BennettLinkage linkage_from_axes(const std::array<LinePlucker, 4>& axes, int base_link,
                                 const DualQuaternion& home_coupler,
                                 const std::array<Eigen::Vector3d, 4>& attachments,
                                 const std::optional<MotionPolynomial>& monic_motion = std::nullopt,
                                 const Tolerances& tol = {});

// Distance between two lines ignoring orientation; moments scaled by 1/length_scale.
double line_distance(const LinePlucker& a, const LinePlucker& b, double length_scale);

}  // namespace bennett
