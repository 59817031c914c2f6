#include "bennett/dq/dual_quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace bennett {

DualQuaternion DualQuaternion::from_study(const std::array<double, 8>& s) {
  return {{s[0], s[1], s[2], s[3]}, {s[4], s[5], s[6], s[7]}};
}

std::array<double, 8> DualQuaternion::study() const {
  return {primal.w, primal.x, primal.y, primal.z, dual.w, dual.x, dual.y, dual.z};
}

DualQuaternion DualQuaternion::inverse() const {
  const Quaternion pi = primal.inverse();
  return {pi, -(pi * dual * pi)};
}

DualQuaternion DualQuaternion::normalized() const {
  const double n = primal.norm();
  DualQuaternion h = *this * (1.0 / n);
  const Eigen::Vector4d c = h.primal.coeffs();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(c[i]) > 1e-12) {
      if (c[i] < 0.0) h = -h;
      break;
    }
  }
  return h;
}

double study_residual(const DualQuaternion& h) { return h.primal.dot(h.dual); }

double study_bilinear(const DualQuaternion& a, const DualQuaternion& b) {
  return 0.5 * (a.primal.dot(b.dual) + b.primal.dot(a.dual));
}

double projective_distance(const DualQuaternion& a, const DualQuaternion& b) {
  const DualQuaternion ua = a * (1.0 / a.primal.norm());
  DualQuaternion ub = b * (1.0 / b.primal.norm());
  if (ua.primal.dot(ub.primal) < 0.0) ub = -ub;
  const auto sa = ua.study();
  const auto sb = ub.study();
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(sa[i] - sb[i]));
  return worst;
}

}  // namespace bennett
