#include "bennett/synthesis/linkage.hpp"

#include <cmath>
#include <limits>

#include "bennett/error.hpp"

namespace bennett {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;

Vec8 as_vec(const DualQuaternion& h) {
  const auto s = h.study();
  return Vec8(s.data());
}

double polynomial_gap(const MotionPolynomial& a, const MotionPolynomial& b) {
  double gap = 0.0, size = 0.0;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    gap = std::max(gap, (as_vec(a[i]) - as_vec(b[i])).norm());
    size = std::max(size, as_vec(a[i]).norm());
  }
  return gap / std::max(size, 1.0);
}

double length_scale(const std::array<LinePlucker, 4>& axes) {
  double s = 0.0;
  for (const auto& l : axes) s = std::max(s, l.moment.norm());
  return std::max(s, 1.0);
}

}  // namespace

MotionPolynomial BennettLinkage::coupler_motion() const {
  return motionpoly_multiply(motion, MotionPolynomial({home_coupler}));
}

double line_distance(const LinePlucker& a, const LinePlucker& b, double scale) {
  const double same = (a.direction - b.direction).norm() + (a.moment - b.moment).norm() / scale;
  const double flip = (a.direction + b.direction).norm() + (a.moment + b.moment).norm() / scale;
  return std::min(same, flip);
}

BennettLinkage linkage_from_motion(const MotionPolynomial& c, const Tolerances& tol) {
  const MotionFactorizations f = factorize_motion(c, tol);
  BennettLinkage link;
  link.axes = {extract_axis(f.a[0], tol), extract_axis(f.a[1], tol), extract_axis(f.b[1], tol),
               extract_axis(f.b[0], tol)};
  link.base_link = 3;
  link.chain_a = f.a;
  link.chain_b = f.b;
  link.motion = f.monic;
  link.home_coupler = f.home.normalized();
  const DhExtraction dh = axes_to_dh(link.axes, tol);
  link.dh = dh.dh;
  link.joint_centers = dh.joint_centers;
  link.attachments = dh.joint_centers;
  return link;
}

BennettLinkage linkage_from_axes(const std::array<LinePlucker, 4>& axes, int base_link,
                                 const DualQuaternion& home_coupler,
                                 const std::array<Eigen::Vector3d, 4>& attachments,
                                 const std::optional<MotionPolynomial>& monic_motion,
                                 const Tolerances& tol) {
  if (base_link < 0 || base_link > 3) {
    throw Error(ErrorCode::InvalidArgument, "base link index must be 0..3");
  }
  BennettLinkage link;
  link.axes = axes;
  link.base_link = base_link;
  link.home_coupler = home_coupler;
  link.attachments = attachments;
  const DhExtraction dh = axes_to_dh(axes, tol);
  link.dh = dh.dh;
  link.joint_centers = dh.joint_centers;

  const LinePlucker& f0 = axes[link.fixed_a()];
  const LinePlucker& m1 = axes[link.moving_a()];
  const LinePlucker& m2 = axes[link.moving_b()];
  const LinePlucker& f3 = axes[link.fixed_b()];
  const double scale = length_scale(axes);

  if (monic_motion) {
    const MotionFactorizations f = factorize_motion(*monic_motion, tol);
    const auto fits = [&](const Factorization& x, const Factorization& y) {
      return line_distance(extract_axis(x[0], tol), f0, scale) +
             line_distance(extract_axis(x[1], tol), m1, scale) +
             line_distance(extract_axis(y[0], tol), f3, scale) +
             line_distance(extract_axis(y[1], tol), m2, scale);
    };
    const double ab = fits(f.a, f.b);
    const double ba = fits(f.b, f.a);
    if (std::min(ab, ba) > std::sqrt(tol.reconstruction)) {
      throw Error(ErrorCode::NotBennett, "stored motion does not move the stored axes");
    }
    link.chain_a = ab <= ba ? f.a : f.b;
    link.chain_b = ab <= ba ? f.b : f.a;
    link.motion = f.monic;
    return link;
  }

  // Bennett chains have the form h1 = c + F0, h2 = l M1, k1 = s2 l F3,
  // k2 = c + s1 M2 once the parameter is shifted and scaled.
  const DualQuaternion lf0 = line_to_dq(f0), lm1 = line_to_dq(m1);
  const DualQuaternion lm2 = line_to_dq(m2), lf3 = line_to_dq(f3);
  double best = std::numeric_limits<double>::infinity();
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      const Vec8 a = as_vec(lm1 - lf3 * s2);
      const double a2 = a.squaredNorm();
      if (a2 < tol.invertible) continue;
      const double lambda = a.dot(as_vec(lm2 * s1 - lf0)) / a2;
      const double c = a.dot(as_vec(lf3 * lm2 * (s1 * s2) - lf0 * lm1)) / a2;
      if (std::abs(lambda) < 1e-9) continue;

      const Factorization ca{rotation_factor(f0, c, 1.0), rotation_factor(m1, 0.0, lambda)};
      const Factorization cb{rotation_factor(f3, 0.0, s2 * lambda), rotation_factor(m2, c, s1)};
      const MotionPolynomial pa = motionpoly_multiply(ca[0].polynomial(), ca[1].polynomial());
      const MotionPolynomial pb = motionpoly_multiply(cb[0].polynomial(), cb[1].polynomial());
      const double gap = polynomial_gap(pa, pb);
      if (gap < best) {
        best = gap;
        link.chain_a = ca;
        link.chain_b = cb;
        link.motion = pa;
      }
    }
  }
  if (!(best <= tol.reconstruction)) {
    throw Error(ErrorCode::NotBennett, "axes do not form a movable Bennett loop");
  }
  return link;
}

}  // namespace bennett
