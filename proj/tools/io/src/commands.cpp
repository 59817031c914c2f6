#include "bennett/io/commands.hpp"

#include <algorithm>
#include <numbers>

#include "bennett/error.hpp"
#include "bennett/synthesis/interpolation.hpp"

namespace bennett::io {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

json factorization_json(const Factorization& f) {
  return json::array({dq_to_json(f[0].h), dq_to_json(f[1].h)});
}

json dh_links_json(const DhExtraction& dh) {
  json links = json::array();
  for (int i = 0; i < 4; ++i) {
    links.push_back({{"a_mm", round12(dh.links[i].length)},
                     {"alpha_deg", round12(dh.links[i].twist * kDeg)},
                     {"offset_mm", round12(dh.offsets[i])}});
  }
  return links;
}

}  // namespace

StrokeSynthesis synthesize_stroke(const std::array<Pose, 3>& poses, const Tolerances& tol) {
  StrokeSynthesis out;
  out.motion = interpolate_three_poses(poses[0], poses[1], poses[2], tol);
  out.linkage = linkage_from_motion(out.motion, tol);
  out.mechanism = mechanism_to_json(out.linkage);

  const DhExtraction dh = axes_to_dh(out.linkage.axes, tol);
  out.report = {
      {"motion", motion_to_json(out.motion)},
      {"monic_motion", motion_to_json(out.linkage.motion)},
      {"factorizations",
       {{"a", factorization_json(out.linkage.chain_a)},
        {"b", factorization_json(out.linkage.chain_b)}}},
      {"dh", dh_to_json(out.linkage.dh)},
      {"dh_links", dh_links_json(dh)},
      {"bennett_residual", round12(check_bennett_condition(out.linkage.dh))},
      {"max_offset_mm", round12(dh.max_offset)},
  };
  return out;
}

FoldSynthesis synthesize_fold(const QuadSpec& spec, const Tolerances& tol) {
  FoldSynthesis out;
  out.planar = build_planar_quad(spec);
  out.twisted = apply_twist(spec, tol);
  out.linkage = quad_to_linkage(out.twisted, spec, tol);
  out.folded = find_folded_configuration(out.linkage, tol);
  out.mechanism = mechanism_to_json(out.linkage);

  const auto folded_points = configuration_at(out.linkage, out.folded.t, tol).attachments;
  const double expanded_area = quad_area(out.twisted.points);
  out.configurations = {
      {"expanded", points_to_json(out.twisted.points)},
      {"folded", points_to_json(folded_points)},
      {"planar",
       {{"expanded", points_to_json(out.planar.expanded.points)},
        {"folded", points_to_json(out.planar.folded.points)}}},
  };
  out.report = {
      {"alpha1_deg", round12(out.twisted.alpha1 * kDeg)},
      {"a1_mm", round12(spec.a1())},
      {"p2_mm", vec3_to_json(out.twisted.points[2])},
      {"p3_mm", vec3_to_json(out.twisted.points[3])},
      {"dh", dh_to_json(out.linkage.dh)},
      {"bennett_residual", round12(check_bennett_condition(out.linkage.dh))},
      {"folded_drive_angle_deg", round12(out.folded.drive_angle * kDeg)},
      {"areas_mm2",
       {{"expanded", round12(expanded_area)},
        {"folded", round12(out.folded.area)},
        {"planar_expanded", round12(quad_area(out.planar.expanded.points))},
        {"planar_folded", round12(quad_area(out.planar.folded.points))}}},
      {"area_ratio", round12(out.folded.area / expanded_area)},
  };
  return out;
}

WingAssembly build_assembly(const ProjectConfig& cfg, const Tolerances& tol) {
  BennettLinkage stroke;
  if (cfg.stroke.mechanism) {
    stroke = *cfg.stroke.mechanism;
  } else if (cfg.stroke.poses) {
    stroke = synthesize_stroke(*cfg.stroke.poses, tol).linkage;
  } else {
    throw Error(ErrorCode::InvalidConfig, "project has no stroke linkage");
  }
  BennettLinkage folding;
  if (cfg.folding.mechanism) {
    folding = *cfg.folding.mechanism;
  } else if (cfg.folding.spec) {
    const TwistedQuad tq = apply_twist(*cfg.folding.spec, tol);
    folding = quad_to_linkage(tq, *cfg.folding.spec, tol);
  } else {
    throw Error(ErrorCode::InvalidConfig, "project has no folding linkage");
  }
  return make_wing_assembly(stroke, dq_from_pose(cfg.mount, tol), folding, cfg.wing, tol);
}

Simulation simulate(const WingAssembly& wing, int samples, const Tolerances& tol) {
  Simulation out;
  out.states = sweep_trajectory(wing, samples, tol);
  out.csv = trajectory_csv(out.states);

  int transitions = 0;
  double max_closure = 0.0;
  double lo = out.states.front().fold_angle, hi = lo;
  double area_lo = out.states.front().swept_area, area_hi = area_lo;
  const int n = static_cast<int>(out.states.size());
  for (int k = 0; k < n; ++k) {
    const WingState& s = out.states[k];
    if (s.fold_state != out.states[(k + 1) % n].fold_state) ++transitions;
    lo = std::min(lo, s.fold_angle);
    hi = std::max(hi, s.fold_angle);
    area_lo = std::min(area_lo, s.swept_area);
    area_hi = std::max(area_hi, s.swept_area);
    const auto stroke_cfg = configuration_at(wing.stroke, s.stroke_t, tol);
    const auto fold_cfg = configuration_at(wing.folding, s.fold_t, tol);
    max_closure = std::max({max_closure, closure_residual(wing.stroke, stroke_cfg.joint_angles),
                            closure_residual(wing.folding, fold_cfg.joint_angles)});
  }
  out.summary = {
      {"samples", n},
      {"transitions", transitions},
      {"stop_limit_deg", round12(wing.options.stop_limit * kDeg)},
      {"fold_angle_range_deg", json::array({round12(lo * kDeg), round12(hi * kDeg)})},
      {"expanded_area_mm2", round12(wing.schedule.expanded_area)},
      {"folded_area_mm2", round12(wing.schedule.folded_area)},
      {"area_ratio", round12(wing.schedule.folded_area / wing.schedule.expanded_area)},
      {"swept_area_range_mm2", json::array({round12(area_lo), round12(area_hi)})},
      {"max_closure_residual", round12(max_closure)},
  };
  return out;
}

json error_json(const Error& e) {
  json j = {{"error", std::string(e.code_name())}, {"message", e.what()}};
  if (e.detail()) j["nearest_fold_angle_deg"] = round12(*e.detail() * kDeg);
  return j;
}

}  // namespace bennett::io
