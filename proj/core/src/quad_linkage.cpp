#include "bennett/quad/quad_linkage.hpp"

#include <cmath>

#include "bennett/error.hpp"
#include "bennett/kinematics/loop.hpp"

namespace bennett {

void QuadSpec::validate() const {
  const bool finite = std::isfinite(a0) && std::isfinite(bennett_ratio) && std::isfinite(alpha0) &&
                      std::isfinite(z[0]) && std::isfinite(z[1]) && std::isfinite(z[2]);
  if (!finite) throw Error(ErrorCode::InvalidSpec, "quad spec contains non-finite values");
  if (!(a0 > 0.0)) throw Error(ErrorCode::InvalidSpec, "a0 must be positive");
  if (!(bennett_ratio > 0.0 && bennett_ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidSpec, "bennett ratio must lie in (0, 1]");
  }
}

PlanarQuads build_planar_quad(const QuadSpec& spec) {
  spec.validate();
  const double a0 = spec.a0;
  const double a1 = spec.a1();
  PlanarQuads q;
  q.expanded.label = ConfigurationLabel::Expanded;
  q.expanded.points = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, a0, spec.z[0]),
                       Eigen::Vector3d(a1, a0, spec.z[1]), Eigen::Vector3d(a1, 0, spec.z[2])};
  q.folded.label = ConfigurationLabel::Folded;
  q.folded.points = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, a0, spec.z[0]),
                     Eigen::Vector3d(0, a0 + a1, spec.z[1]), Eigen::Vector3d(0, a1, spec.z[2])};
  return q;
}

double quad_area(const std::array<Eigen::Vector3d, 4>& p) {
  return 0.5 * (p[2] - p[0]).cross(p[3] - p[1]).norm();
}

TwistedQuad apply_twist(const QuadSpec& spec, const Tolerances& tol) {
  spec.validate();
  const double s0 = std::sin(spec.alpha0);
  if (std::abs(s0) > spec.bennett_ratio) {
    throw Error(ErrorCode::TwistInfeasible, "no side-link twist satisfies the Bennett ratio");
  }
  const double a0 = spec.a0;
  const double a1 = spec.a1();

  TwistedQuad out;
  out.alpha1 = std::asin(std::abs(s0) / spec.bennett_ratio);
  const double alpha1 = std::copysign(out.alpha1, s0);

  // Base link along +y with signed twist alpha0; the link 1-2 runs along +x
  // with signed twist -alpha1.
  const Eigen::Vector3d j0(0, 0, 0);
  const Eigen::Vector3d j1(0, a0, 0);
  const Eigen::Vector3d j2(a1, a0, 0);
  const Eigen::Vector3d u0(-std::sin(spec.alpha0), 0, std::cos(spec.alpha0));
  const Eigen::Vector3d u1 = Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d u2(0, std::sin(alpha1), std::cos(alpha1));

  // The loop is invariant under a half-turn exchanging axes 0 and 2, which
  // also carries axis 1 onto axis 3.
  const Eigen::Vector3d mid = 0.5 * (j0 + j2);
  const Eigen::Vector3d diag = (j2 - j0).normalized();
  const Eigen::Vector3d plus = u0 + u2;
  const Eigen::Vector3d minus = u0 - u2;
  const auto misfit = [&](const Eigen::Vector3d& v) {
    return v.norm() < 1e-9 ? 2.0 : std::abs(v.normalized().dot(diag));
  };
  const bool use_plus = misfit(plus) <= misfit(minus);
  const Eigen::Vector3d k = (use_plus ? plus : minus).normalized();
  if (std::min(misfit(plus), misfit(minus)) > 1e-9) {
    throw Error(ErrorCode::ClosureFailure, "twisted quad has no symmetric closure");
  }
  const Eigen::Matrix3d half_turn = 2.0 * k * k.transpose() - Eigen::Matrix3d::Identity();
  const Eigen::Vector3d j3 = mid + half_turn * (j1 - mid);
  const Eigen::Vector3d u3 = (use_plus ? 1.0 : -1.0) * (half_turn * u1);

  out.joint_centers = {j0, j1, j2, j3};
  const std::array<Eigen::Vector3d, 4> dirs = {u0, u1, u2, u3};
  const std::array<double, 4> offsets = {0.0, spec.z[0], spec.z[1], spec.z[2]};
  for (int i = 0; i < 4; ++i) {
    out.axes[i] = LinePlucker::through(out.joint_centers[i], dirs[i]);
    out.points[i] = out.joint_centers[i] + offsets[i] * dirs[i];
  }

  const DhExtraction dh = axes_to_dh(out.axes, tol);
  const double tol_len = 1e-9 * a1;
  if (dh.max_offset > tol_len || std::abs(dh.links[0].length - a0) > tol_len ||
      std::abs(dh.links[1].length - a1) > tol_len || dh.opposite_mismatch > 1e-9) {
    throw Error(ErrorCode::ClosureFailure, "twisted quad does not close as a Bennett loop");
  }
  return out;
}

BennettLinkage quad_to_linkage(const TwistedQuad& quad, const QuadSpec& spec,
                               const Tolerances& tol) {
  BennettLinkage link;
  try {
    link = linkage_from_axes(quad.axes, 0, DualQuaternion::identity(), quad.points, std::nullopt,
                             tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::ClosureFailure, std::string("folding loop is not movable: ") + e.what());
  }
  const FoldedSearch folded = find_folded_configuration(link, tol);
  if (!folded.found) {
    throw Error(ErrorCode::ClosureFailure, "folding loop never reaches a folded configuration");
  }
  const double tol_len = 1e-9 * spec.a1();
  if (std::abs(link.dh.a0 - spec.a0) > tol_len || std::abs(link.dh.a1 - spec.a1()) > tol_len) {
    throw Error(ErrorCode::ClosureFailure, "folding loop does not match the quad spec");
  }
  return link;
}

}  // namespace bennett
