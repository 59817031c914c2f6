#pragma once

#include <array>

#include "bennett/synthesis/linkage.hpp"

namespace bennett {

// Planar wing quadrilateral before twisting. Lengths mm, angle radians.
struct QuadSpec {
  double a0 = 80.0;              // base link p0-p1
  double bennett_ratio = 0.5;    // a0 / a1
  std::array<double, 3> z{};     // out-of-plane offsets of p1, p2, p3 (p0 sits at z = 0)
  double alpha0 = 0.0;           // twist of the base link

  double a1() const { return a0 / bennett_ratio; }
  // InvalidSpec for non-positive lengths, a ratio outside (0, 1], non-finite values.
  void validate() const;
};

enum class ConfigurationLabel { Expanded, Folded };

struct QuadConfiguration {
  std::array<Eigen::Vector3d, 4> points;
  ConfigurationLabel label = ConfigurationLabel::Expanded;
};

struct PlanarQuads {
  QuadConfiguration expanded;  // rectangle a0 x a1 in the xy plane
  QuadConfiguration folded;    // links 1-2 and 3-0 turned onto the y axis
};

PlanarQuads build_planar_quad(const QuadSpec& spec);

// Quadrilateral after twisting the base link by alpha0 and the side links by
// the matching Bennett twist. Axis 1 stays on the z axis through (0, a0, 0).
struct TwistedQuad {
  double alpha1 = 0.0;                          // magnitude, radians
  std::array<Eigen::Vector3d, 4> points;        // p0, p1, p2'', p3''
  std::array<Eigen::Vector3d, 4> joint_centers;
  std::array<LinePlucker, 4> axes;              // loop order 0..3
};

// TwistInfeasible when |sin alpha0| exceeds the Bennett ratio.
TwistedQuad apply_twist(const QuadSpec& spec, const Tolerances& tol = {});

// Half the norm of the diagonal cross product (p2 - p0) x (p3 - p1).
double quad_area(const std::array<Eigen::Vector3d, 4>& points);

// Folding linkage with the base link p0-p1 fixed (base_link = 0).
// ClosureFailure if the rebuilt loop does not move through its folded pose.
BennettLinkage quad_to_linkage(const TwistedQuad& quad, const QuadSpec& spec,
                               const Tolerances& tol = {});

}  // namespace bennett
