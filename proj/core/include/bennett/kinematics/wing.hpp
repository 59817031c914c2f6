#pragma once

#include <vector>

#include "bennett/kinematics/loop.hpp"

namespace bennett {

enum class StrokePhase { Downstroke, Upstroke };
enum class FoldState { Extended, Folded };

struct WingOptions {
  double stop_limit = 75.0 * 3.14159265358979323846 / 180.0;  // radians, in (0, pi)
  Eigen::Vector3d forward_axis = Eigen::Vector3d::UnitX();
  // Distance along the coupler y axis of the point whose forward travel defines the stroke phase.
  double sweep_reach = 100.0;
  // First-order lag of the fold joint in cycle fractions; 0 switches instantly.
  double fold_lag = 0.0;
  bool allow_nearest_stop = false;
};

// Fold-joint angles are measured from the midpoint between the expanded
// (home) and folded configurations of the folding linkage, positive towards
// expanded. Targets are those two configurations, limited by the stops.
struct FoldSchedule {
  FoldedSearch folded;
  double neutral = 0.0;          // drive angle of the folding linkage at fold angle 0
  double sense = 1.0;            // drive angle = neutral + sense * fold angle
  double extended_target = 0.0;
  double folded_target = 0.0;
  double expanded_area = 0.0;
  double folded_area = 0.0;
};

struct WingAssembly {
  BennettLinkage stroke;
  DualQuaternion mount = DualQuaternion::identity();  // stroke coupler -> folding base
  BennettLinkage folding;
  WingOptions options;
  FoldSchedule schedule;
};

// Validates the options (InvalidArgument) and precomputes the fold schedule
// (ClosureFailure if the folding linkage never folds).
WingAssembly make_wing_assembly(const BennettLinkage& stroke, const DualQuaternion& mount,
                                const BennettLinkage& folding, const WingOptions& options,
                                const Tolerances& tol = {});

struct WingState {
  MotionParameter stroke_t = MotionParameter::infinity();
  double drive_angle = 0.0;
  DualQuaternion stroke_pose;
  StrokePhase phase = StrokePhase::Downstroke;
  FoldState fold_state = FoldState::Extended;
  double fold_angle = 0.0;
  MotionParameter fold_t = MotionParameter::infinity();
  std::array<Eigen::Vector3d, 4> wing_points;
  double swept_area = 0.0;
};

// World coordinate whose rate of change sets the stroke phase.
double sweep_coordinate(const WingAssembly& wing, double drive_angle, const Tolerances& tol = {});
StrokePhase stroke_phase(const WingAssembly& wing, double drive_angle, const Tolerances& tol = {});

// Instantaneous state: the fold joint sits at its target for the phase.
// UnreachableStop if the folding loop cannot close there.
WingState wing_state(const WingAssembly& wing, MotionParameter stroke_t, const Tolerances& tol = {});

// n >= 8 samples uniform in the drive angle, starting at t = inf. Sample k of
// n coincides with sample 2k of 2n when no lag is configured.
std::vector<WingState> sweep_trajectory(const WingAssembly& wing, int n_samples,
                                        const Tolerances& tol = {});

// Same linkage seen from a frame moved by `g`.
BennettLinkage transform_linkage(const BennettLinkage& link, const Pose& g);

}  // namespace bennett
