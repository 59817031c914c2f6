#include "bennett/kinematics/wing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bennett/error.hpp"
#include "bennett/quad/quad_linkage.hpp"

namespace bennett {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_pi(double a) {
  a = std::remainder(a, kTwoPi);
  return a <= -std::numbers::pi ? a + kTwoPi : a;
}

struct FoldPose {
  double angle;
  MotionParameter t;
  LoopConfiguration cfg;
};

FoldPose fold_pose(const WingAssembly& wing, double psi, const Tolerances& tol) {
  const double delta = wing.schedule.neutral + wing.schedule.sense * psi;
  const MotionParameter t =
      parameter_at_drive_angle(wing.folding, std::fmod(delta + 2.0 * kTwoPi, kTwoPi));
  return {psi, t, configuration_at(wing.folding, t, tol)};
}

bool closes(const WingAssembly& wing, const FoldPose& fp, const Tolerances& tol) {
  return closure_residual(wing.folding, fp.cfg.joint_angles) <= tol.closure;
}

// Fold pose at the requested angle, or the largest reachable magnitude below it.
FoldPose solve_fold(const WingAssembly& wing, double psi, const Tolerances& tol) {
  FoldPose fp = fold_pose(wing, psi, tol);
  if (closes(wing, fp, tol)) return fp;
  double lo = 0.0, hi = std::abs(psi);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (closes(wing, fold_pose(wing, std::copysign(mid, psi), tol), tol) ? lo : hi) = mid;
  }
  const double nearest = std::copysign(lo, psi);
  if (!wing.options.allow_nearest_stop) {
    throw Error(ErrorCode::UnreachableStop, "folding loop cannot close at the clamped angle",
                nearest);
  }
  return fold_pose(wing, nearest, tol);
}

WingState assemble_state(const WingAssembly& wing, MotionParameter stroke_t, double chi,
                         StrokePhase phase, double psi, const Tolerances& tol) {
  WingState s;
  s.stroke_t = stroke_t;
  s.drive_angle = chi;
  s.stroke_pose = coupler_pose(wing.stroke, stroke_t, tol);
  s.phase = phase;
  s.fold_state = phase == StrokePhase::Downstroke ? FoldState::Extended : FoldState::Folded;
  const FoldPose fp = solve_fold(wing, psi, tol);
  s.fold_angle = fp.angle;
  s.fold_t = fp.t;
  const Pose to_world = dq_to_pose(s.stroke_pose * wing.mount, tol);
  for (int i = 0; i < 4; ++i) s.wing_points[i] = to_world.apply(fp.cfg.attachments[i]);
  s.swept_area = quad_area(s.wing_points);
  return s;
}

double target_for(const WingAssembly& wing, StrokePhase phase) {
  return phase == StrokePhase::Downstroke ? wing.schedule.extended_target
                                          : wing.schedule.folded_target;
}

}  // namespace

WingAssembly make_wing_assembly(const BennettLinkage& stroke, const DualQuaternion& mount,
                                const BennettLinkage& folding, const WingOptions& options,
                                const Tolerances& tol) {
  if (!(options.stop_limit > 0.0 && options.stop_limit < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "stop limit must lie in (0, pi)");
  }
  if (!(options.forward_axis.norm() > 0.0) || !options.forward_axis.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "forward axis must be a non-zero vector");
  }
  if (!(options.fold_lag >= 0.0) || !std::isfinite(options.sweep_reach)) {
    throw Error(ErrorCode::InvalidArgument, "fold lag must be non-negative");
  }
  WingAssembly wing{stroke, mount.normalized(), folding, options, {}};
  wing.options.forward_axis.normalize();
  (void)dq_to_pose(wing.mount, tol);

  FoldSchedule& s = wing.schedule;
  s.folded = find_folded_configuration(folding, tol);
  if (!s.folded.found) {
    throw Error(ErrorCode::ClosureFailure, "folding linkage never reaches a folded configuration");
  }
  const double delta_f = wrap_pi(s.folded.drive_angle);
  s.neutral = 0.5 * delta_f;
  s.sense = delta_f >= 0.0 ? -1.0 : 1.0;
  const double half = std::min(0.5 * std::abs(delta_f), options.stop_limit);
  s.extended_target = half;
  s.folded_target = -half;
  s.expanded_area = quad_area(folding.attachments);
  s.folded_area = s.folded.area;
  return wing;
}

double sweep_coordinate(const WingAssembly& wing, double chi, const Tolerances& tol) {
  const Pose p =
      dq_to_pose(coupler_pose(wing.stroke, parameter_at_drive_angle(wing.stroke, chi), tol), tol);
  const Eigen::Vector3d tip = p.translation + wing.options.sweep_reach * p.rotation.col(1);
  return wing.options.forward_axis.dot(tip);
}

StrokePhase stroke_phase(const WingAssembly& wing, double chi, const Tolerances& tol) {
  constexpr double h = 1e-6;
  const double rate = sweep_coordinate(wing, chi + h, tol) - sweep_coordinate(wing, chi - h, tol);
  return rate >= 0.0 ? StrokePhase::Downstroke : StrokePhase::Upstroke;
}

WingState wing_state(const WingAssembly& wing, MotionParameter stroke_t, const Tolerances& tol) {
  const double chi = drive_angle(wing.stroke, stroke_t);
  const StrokePhase phase = stroke_phase(wing, chi, tol);
  return assemble_state(wing, stroke_t, chi, phase, target_for(wing, phase), tol);
}

std::vector<WingState> sweep_trajectory(const WingAssembly& wing, int n, const Tolerances& tol) {
  if (n < 8) throw Error(ErrorCode::SamplesTooFew, "trajectory needs at least 8 samples");

  std::vector<double> chi(n);
  std::vector<StrokePhase> phase(n);
  std::vector<double> psi(n);
  for (int k = 0; k < n; ++k) {
    chi[k] = kTwoPi * k / n;
    phase[k] = stroke_phase(wing, chi[k], tol);
    psi[k] = target_for(wing, phase[k]);
  }
  if (wing.options.fold_lag > 0.0) {
    // Two passes around the cycle settle the lag into its periodic response.
    const double gain = 1.0 - std::exp(-1.0 / (n * wing.options.fold_lag));
    double state = psi[0];
    std::vector<double> lagged(n);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < n; ++k) {
        state += (psi[k] - state) * gain;
        lagged[k] = state;
      }
    }
    psi = lagged;
  }

  std::vector<WingState> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    out.push_back(assemble_state(wing, parameter_at_drive_angle(wing.stroke, chi[k]), chi[k],
                                 phase[k], psi[k], tol));
  }
  return out;
}

BennettLinkage transform_linkage(const BennettLinkage& link, const Pose& g) {
  const DualQuaternion gd = dq_from_pose(g);
  const DualQuaternion gi = gd.inverse();
  BennettLinkage out = link;
  for (int i = 0; i < 4; ++i) {
    out.axes[i] = link.axes[i].transformed(g);
    out.joint_centers[i] = g.apply(link.joint_centers[i]);
    out.attachments[i] = g.apply(link.attachments[i]);
  }
  for (auto& c : out.motion.coefficients) c = gd * c * gi;
  for (auto* chain : {&out.chain_a, &out.chain_b}) {
    for (auto& f : *chain) f.h = gd * f.h * gi;
  }
  out.home_coupler = (gd * link.home_coupler).normalized();
  return out;
}

}  // namespace bennett
