#pragma once

#include <array>

#include "bennett/synthesis/linkage.hpp"

namespace bennett {

// Coupler displacement from home at t, as a rigid transform.
Pose displacement_at(const BennettLinkage& link, MotionParameter t, const Tolerances& tol = {});

// Coupler pose including the home frame, unit primal part.
DualQuaternion coupler_pose(const BennettLinkage& link, MotionParameter t,
                            const Tolerances& tol = {});

// The input crank angle: rotation of chain_a's fixed joint travelled from home.
double drive_angle(const BennettLinkage& link, MotionParameter t);
MotionParameter parameter_at_drive_angle(const BennettLinkage& link, double chi);

struct LoopConfiguration {
  MotionParameter t = MotionParameter::infinity();
  std::array<LinePlucker, 4> axes;
  std::array<Eigen::Vector3d, 4> joint_centers;
  std::array<Eigen::Vector3d, 4> attachments;
  std::array<double, 4> joint_angles{};  // DH angle at each axis
};

LoopConfiguration configuration_at(const BennettLinkage& link, MotionParameter t,
                                   const Tolerances& tol = {});

// Frobenius norm of prod_i Rz(theta_i) Tx(a_i) Rx(alpha_i) - I over the loop.
double closure_residual(const BennettLinkage& link, const std::array<double, 4>& joint_angles);

struct FoldDetection {
  bool is_folded = false;
  // Second singular value over the first of the centred joint centres;
  // zero when all four lie on one line, the common transversal of the axes.
  double transversal_gap = 0.0;
  bool degenerate = false;  // joint centres coincide
};

FoldDetection detect_folded(const BennettLinkage& link, MotionParameter t,
                            const Tolerances& tol = {});

struct FoldedSearch {
  bool found = false;
  MotionParameter t = MotionParameter::infinity();
  double drive_angle = 0.0;
  double transversal_gap = 0.0;
  double area = 0.0;  // quad_area of the attachments there
};

// Folded configuration over one cycle: among the flat configurations, the one
// that stretches chain_a's moving joint furthest from chain_b's fixed joint.
FoldedSearch find_folded_configuration(const BennettLinkage& link, const Tolerances& tol = {});

}  // namespace bennett
