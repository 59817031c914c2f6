#pragma once

#include <array>
#include <complex>
#include <vector>

#include "bennett/dq/motion_polynomial.hpp"
#include "bennett/synthesis/line.hpp"

namespace bennett {

// The linear motion t - h. For a revolute factor h = c + lambda L with L a
// unit line, the vector part of the primal has length |lambda|.
struct RotationFactor {
  DualQuaternion h;

  MotionPolynomial polynomial() const { return linear_factor(h); }
  double shift() const { return h.primal.w; }
  double radius() const { return h.primal.vec().norm(); }
};

// h = c + lambda * line.
RotationFactor rotation_factor(const LinePlucker& axis, double c, double lambda);

using Factorization = std::array<RotationFactor, 2>;

struct MotionFactorizations {
  Factorization a;               // second factor's norm has the smaller constant term
  Factorization b;
  MotionPolynomial monic;        // motion * leading^-1, so monic(inf) = identity
  DualQuaternion home;           // leading coefficient of the input
};

// Both factorizations of a quadratic motion. NonQuadratic for other degrees or
// a non-invertible leading coefficient, DegenerateNorm when the norm
// polynomial has real or repeated quadratic factors.
MotionFactorizations factorize_motion(const MotionPolynomial& c, const Tolerances& tol = {});

// Rotation axis of t - h. PureTranslationFactor when the primal vector vanishes.
LinePlucker extract_axis(const RotationFactor& factor, const Tolerances& tol = {});

// Signed rotation angle of t - h about extract_axis(h), in (-pi, pi].
double joint_angle_from_factor(const RotationFactor& factor, MotionParameter t);
// Angle travelled from t = inf, in [0, 2 pi); decreasing t increases it.
double cycle_angle(const RotationFactor& factor, MotionParameter t);
MotionParameter parameter_at_cycle_angle(const RotationFactor& factor, double chi);

// Complex roots of a real polynomial given in ascending coefficients.
std::vector<std::complex<double>> real_polynomial_roots(const std::vector<double>& ascending);

}  // namespace bennett
