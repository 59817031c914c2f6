#include "bennett/synthesis/bennett_dh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bennett/error.hpp"

namespace bennett {

namespace {

double wrap_pi(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  return a <= -std::numbers::pi ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace

double check_bennett_condition(const BennettDH& dh) {
  const double scale = std::max(std::abs(dh.a0), std::abs(dh.a1));
  if (scale == 0.0) return 0.0;
  return std::abs(dh.a1 * std::abs(std::sin(dh.alpha0)) - dh.a0 * std::abs(std::sin(dh.alpha1))) /
         scale;
}

DhExtraction axes_to_dh(const std::array<LinePlucker, 4>& axes, const Tolerances& tol) {
  DhExtraction out;

  // Skew pairs have a unique perpendicular. Parallel pairs reuse a foot that
  // is already fixed on their first axis so the offsets stay zero.
  std::array<bool, 4> done{};
  std::array<CommonPerpendicular, 4> cps;
  for (int i = 0; i < 4; ++i) {
    const auto& a = axes[i];
    const auto& b = axes[(i + 1) % 4];
    const double sin_angle = a.direction.cross(b.direction).norm();
    if (sin_angle >= tol.parallel) {
      cps[i] = common_perpendicular(a, b, Eigen::Vector3d::Zero(), tol);
      done[i] = true;
    }
  }
  // Chain parallel pairs off the previous foot; seed an isolated chain at the
  // point of its first axis nearest the origin.
  while (std::count(done.begin(), done.end(), false) > 0) {
    bool progressed = false;
    for (int i = 0; i < 4; ++i) {
      const int prev = (i + 3) % 4;
      if (done[i] || !done[prev]) continue;
      cps[i] = common_perpendicular(axes[i], axes[(i + 1) % 4], cps[prev].foot_second, tol);
      done[i] = true;
      progressed = true;
    }
    if (!progressed) {
      const int i = static_cast<int>(std::find(done.begin(), done.end(), false) - done.begin());
      cps[i] = common_perpendicular(axes[i], axes[(i + 1) % 4], axes[i].anchor(), tol);
      done[i] = true;
    }
  }
  for (const auto& cp : cps) {
    if (cp.parallel && cp.intersecting) {
      throw Error(ErrorCode::CoincidentAxes, "consecutive axes coincide");
    }
  }

  for (int i = 0; i < 4; ++i) {
    out.links[i] = {cps[i].distance, cps[i].twist, cps[i].foot_first, cps[i].foot_second,
                    cps[i].normal, cps[i].parallel};
  }
  for (int i = 0; i < 4; ++i) {
    const int prev = (i + 3) % 4;
    out.offsets[i] = axes[i].direction.dot(out.links[i].foot_start - out.links[prev].foot_end);
    out.joint_centers[i] = out.links[i].foot_start;
    out.max_offset = std::max(out.max_offset, std::abs(out.offsets[i]));
  }
  out.dh = {out.links[0].length, out.links[0].twist, out.links[1].length, out.links[1].twist};
  for (int i = 0; i < 2; ++i) {
    out.opposite_mismatch = std::max(
        {out.opposite_mismatch, std::abs(out.links[i].length - out.links[i + 2].length),
         std::abs(wrap_pi(out.links[i].twist - out.links[i + 2].twist))});
  }
  out.planar = std::all_of(out.links.begin(), out.links.end(),
                           [](const DhLink& l) { return l.parallel; });
  out.spherical = std::all_of(out.links.begin(), out.links.end(),
                              [&](const DhLink& l) { return l.length < tol.intersect_mm; });
  return out;
}

std::array<double, 4> dh_joint_angles(const DhExtraction& extraction,
                                      const std::array<LinePlucker, 4>& axes) {
  std::array<double, 4> theta{};
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector3d& n_in = extraction.links[(i + 3) % 4].normal;
    const Eigen::Vector3d& n_out = extraction.links[i].normal;
    theta[i] = std::atan2(n_in.cross(n_out).dot(axes[i].direction), n_in.dot(n_out));
  }
  return theta;
}

}  // namespace bennett
