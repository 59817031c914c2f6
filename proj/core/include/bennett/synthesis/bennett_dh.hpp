#pragma once

#include <array>

#include "bennett/synthesis/line.hpp"

namespace bennett {

// Denavit-Hartenberg data of a Bennett loop. Opposite links are equal, so two
// (length, twist) pairs describe all four. Lengths in mm, signed twists in radians.
struct BennettDH {
  double a0 = 0.0;
  double alpha0 = 0.0;
  double a1 = 0.0;
  double alpha1 = 0.0;

  double length(int link) const { return (link % 2 == 0) ? a0 : a1; }
  double twist(int link) const { return (link % 2 == 0) ? alpha0 : alpha1; }
};

// |a1 |sin alpha0| - a0 |sin alpha1|| / max(a0, a1). Zero for a Bennett loop.
double check_bennett_condition(const BennettDH& dh);

struct DhLink {
  double length = 0.0;
  double twist = 0.0;
  Eigen::Vector3d foot_start;  // on axis i
  Eigen::Vector3d foot_end;    // on axis i+1
  Eigen::Vector3d normal;
  bool parallel = false;
};

struct DhExtraction {
  BennettDH dh;                           // links 0 and 1
  std::array<DhLink, 4> links;            // link i joins axis i to axis i+1
  std::array<double, 4> offsets{};        // signed offset along axis i between feet
  std::array<Eigen::Vector3d, 4> joint_centers;
  double max_offset = 0.0;
  double opposite_mismatch = 0.0;         // max |a_i - a_{i+2}|, |alpha_i - alpha_{i+2}|
  bool planar = false;                    // every twist is 0 or pi
  bool spherical = false;                 // every length vanishes
};

// Axes in loop order. CoincidentAxes if consecutive axes coincide.
DhExtraction axes_to_dh(const std::array<LinePlucker, 4>& axes, const Tolerances& tol = {});

// DH joint angle at each axis, from the incoming to the outgoing common normal.
std::array<double, 4> dh_joint_angles(const DhExtraction& extraction,
                                      const std::array<LinePlucker, 4>& axes);

}  // namespace bennett
