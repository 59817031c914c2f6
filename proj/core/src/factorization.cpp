#include "bennett/synthesis/factorization.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "bennett/error.hpp"

namespace bennett {

RotationFactor rotation_factor(const LinePlucker& axis, double c, double lambda) {
  return {DualQuaternion::real(c) + line_to_dq(axis) * lambda};
}

std::vector<std::complex<double>> real_polynomial_roots(const std::vector<double>& ascending) {
  std::vector<double> coeffs = ascending;
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

namespace {

// Polish a root of a real polynomial with a few Newton steps.
std::complex<double> polish(const std::vector<double>& ascending, std::complex<double> z) {
  for (int iter = 0; iter < 4; ++iter) {
    std::complex<double> f = 0.0, df = 0.0;
    for (int i = static_cast<int>(ascending.size()) - 1; i >= 0; --i) {
      df = df * z + f;
      f = f * z + ascending[i];
    }
    if (std::abs(df) == 0.0) break;
    z -= f / df;
  }
  return z;
}

struct Quadratic {
  double m1;  // t^2 + m1 t + m0
  double m0;
};

Factorization factor_for(const MotionPolynomial& monic, const Quadratic& m, const Tolerances& tol) {
  const DualQuaternion r1 = monic[1] - DualQuaternion::real(m.m1);
  const DualQuaternion r0 = monic[0] - DualQuaternion::real(m.m0);
  if (r1.primal.norm() <= tol.invertible * std::sqrt(r1.squared_length() + r0.squared_length())) {
    throw Error(ErrorCode::DegenerateNorm, "remainder has no invertible linear coefficient");
  }
  const DualQuaternion h2 = -(r1.inverse() * r0);
  const DualQuaternion h1 = -monic[1] - h2;
  return {RotationFactor{h1}, RotationFactor{h2}};
}

}  // namespace

MotionFactorizations factorize_motion(const MotionPolynomial& c, const Tolerances& tol) {
  if (c.degree() != 2) {
    throw Error(ErrorCode::NonQuadratic, "factorization needs a quadratic motion");
  }
  const DualQuaternion& lead = c.leading();
  if (lead.primal.norm() <= tol.invertible * std::sqrt(lead.squared_length())) {
    throw Error(ErrorCode::NonQuadratic, "leading coefficient is not invertible");
  }

  MotionFactorizations out;
  out.home = lead;
  const DualQuaternion lead_inv = lead.inverse();
  out.monic = MotionPolynomial({c[0] * lead_inv, c[1] * lead_inv, DualQuaternion::identity()});

  const std::vector<double> nu = norm_polynomial(out.monic);
  double scale = 1.0;
  for (double v : nu) scale = std::max(scale, std::abs(v));
  scale = std::pow(scale, 0.25);

  std::vector<std::complex<double>> upper;
  for (auto z : real_polynomial_roots(nu)) {
    z = polish(nu, z);
    if (std::abs(z.imag()) <= tol.root_separation * (scale + std::abs(z))) {
      throw Error(ErrorCode::DegenerateNorm, "norm polynomial has a real root");
    }
    if (z.imag() > 0.0) upper.push_back(z);
  }
  if (upper.size() != 2) {
    throw Error(ErrorCode::DegenerateNorm, "norm polynomial roots do not pair up");
  }
  if (std::abs(upper[0] - upper[1]) <= tol.root_separation * (scale + std::abs(upper[0]))) {
    throw Error(ErrorCode::DegenerateNorm, "norm polynomial has a repeated quadratic factor");
  }

  std::array<Quadratic, 2> quads{};
  for (int i = 0; i < 2; ++i) quads[i] = {-2.0 * upper[i].real(), std::norm(upper[i])};
  std::sort(quads.begin(), quads.end(), [](const Quadratic& x, const Quadratic& y) {
    return x.m0 != y.m0 ? x.m0 < y.m0 : x.m1 < y.m1;
  });

  out.a = factor_for(out.monic, quads[0], tol);
  out.b = factor_for(out.monic, quads[1], tol);
  return out;
}

LinePlucker extract_axis(const RotationFactor& factor, const Tolerances& tol) {
  const Eigen::Vector3d pv = factor.h.primal.vec();
  const double s = pv.norm();
  if (s <= tol.invertible * std::sqrt(factor.h.squared_length())) {
    throw Error(ErrorCode::PureTranslationFactor, "factor has no rotational part");
  }
  const Eigen::Vector3d d = pv / s;
  Eigen::Vector3d m = -factor.h.dual.vec() / s;
  m -= d * d.dot(m);
  return {d, m};
}

double joint_angle_from_factor(const RotationFactor& factor, MotionParameter t) {
  if (t.is_infinite()) return 0.0;
  const double a = -2.0 * std::atan2(factor.radius(), t.value() - factor.shift());
  return a <= -std::numbers::pi ? a + 2.0 * std::numbers::pi : a;
}

double cycle_angle(const RotationFactor& factor, MotionParameter t) {
  if (t.is_infinite()) return 0.0;
  return 2.0 * std::atan2(factor.radius(), t.value() - factor.shift());
}

MotionParameter parameter_at_cycle_angle(const RotationFactor& factor, double chi) {
  const double half = 0.5 * std::remainder(chi, 2.0 * std::numbers::pi);
  if (half == 0.0) return MotionParameter::infinity();
  return MotionParameter::at(factor.shift() + factor.radius() / std::tan(half));
}

}  // namespace bennett
