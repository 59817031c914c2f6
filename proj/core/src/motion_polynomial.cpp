#include "bennett/dq/motion_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bennett/error.hpp"

namespace bennett {

MotionPolynomial MotionPolynomial::conjugate() const {
  MotionPolynomial out;
  out.coefficients.reserve(coefficients.size());
  for (const auto& c : coefficients) out.coefficients.push_back(c.conjugate());
  return out;
}

MotionPolynomial MotionPolynomial::scaled(double s) const {
  MotionPolynomial out = *this;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

MotionPolynomial linear_factor(const DualQuaternion& h) {
  return MotionPolynomial({-h, DualQuaternion::identity()});
}

DualQuaternion motionpoly_eval(const MotionPolynomial& c, MotionParameter t) {
  if (c.coefficients.empty()) return {};
  if (t.is_infinite()) return c.leading();
  DualQuaternion acc = c.leading();
  for (int i = c.degree() - 1; i >= 0; --i) acc = acc * t.value() + c.coefficients[i];
  return acc;
}

MotionPolynomial motionpoly_multiply(const MotionPolynomial& a, const MotionPolynomial& b) {
  if (a.coefficients.empty() || b.coefficients.empty()) return {};
  std::vector<DualQuaternion> out(a.coefficients.size() + b.coefficients.size() - 1);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      out[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return MotionPolynomial(std::move(out));
}

MotionPolynomial motionpoly_add(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<DualQuaternion> out(std::max(a.coefficients.size(), b.coefficients.size()));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) out[i] += a.coefficients[i];
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out[i] += b.coefficients[i];
  return MotionPolynomial(std::move(out));
}

MotionDivision motionpoly_right_divide(const MotionPolynomial& a, const MotionPolynomial& divisor,
                                       const Tolerances& tol) {
  if (divisor.coefficients.empty()) {
    throw Error(ErrorCode::NonMonicDivisor, "empty divisor");
  }
  const DualQuaternion& lead = divisor.leading();
  if (lead.primal.norm() <= tol.invertible * std::sqrt(divisor.leading().squared_length() + 1.0)) {
    throw Error(ErrorCode::NonMonicDivisor, "divisor leading coefficient is not invertible");
  }
  const DualQuaternion lead_inv = lead.inverse();
  const int m = divisor.degree();
  const int n = a.degree();

  std::vector<DualQuaternion> rem = a.coefficients;
  std::vector<DualQuaternion> quot(static_cast<std::size_t>(std::max(n - m + 1, 1)));
  for (int k = n - m; k >= 0; --k) {
    const DualQuaternion qk = rem[k + m] * lead_inv;
    quot[k] = qk;
    for (int j = 0; j <= m; ++j) rem[k + j] -= qk * divisor.coefficients[j];
  }
  rem.resize(static_cast<std::size_t>(std::max(m, 1)));
  if (n < m) rem = a.coefficients;
  return {MotionPolynomial(std::move(quot)), MotionPolynomial(std::move(rem))};
}

std::vector<double> study_polynomial(const MotionPolynomial& c) {
  if (c.coefficients.empty()) return {};
  std::vector<double> out(2 * c.coefficients.size() - 1, 0.0);
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
      out[i + j] += study_bilinear(c.coefficients[i], c.coefficients[j]);
    }
  }
  return out;
}

std::vector<double> norm_polynomial(const MotionPolynomial& c) {
  const MotionPolynomial n = motionpoly_multiply(c, c.conjugate());
  std::vector<double> out;
  out.reserve(n.coefficients.size());
  for (const auto& k : n.coefficients) out.push_back(k.primal.w);
  return out;
}

double projective_polynomial_distance(const MotionPolynomial& a, const MotionPolynomial& b) {
  if (a.coefficients.size() != b.coefficients.size() || a.coefficients.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  const double sa = 1.0 / a.leading().primal.norm();
  double sb = 1.0 / b.leading().primal.norm();
  if (a.leading().primal.dot(b.leading().primal) < 0.0) sb = -sb;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    const auto ca = (a.coefficients[i] * sa).study();
    const auto cb = (b.coefficients[i] * sb).study();
    for (std::size_t k = 0; k < 8; ++k) worst = std::max(worst, std::abs(ca[k] - cb[k]));
  }
  return worst;
}

}  // namespace bennett
