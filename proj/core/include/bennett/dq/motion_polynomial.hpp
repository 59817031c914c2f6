#pragma once

#include <vector>

#include "bennett/dq/dual_quaternion.hpp"
#include "bennett/dq/tolerance.hpp"

namespace bennett {

// Curve parameter on the projective line: a real value or the point at infinity.
class MotionParameter {
 public:
  static MotionParameter at(double t) { return MotionParameter(t, false); }
  static MotionParameter infinity() { return MotionParameter(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Meaningless for the point at infinity.
  double value() const { return value_; }

  bool operator==(const MotionParameter& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  MotionParameter(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

// Polynomial in a real indeterminate t with dual-quaternion coefficients,
// stored in ascending powers. t commutes with every coefficient.
struct MotionPolynomial {
  std::vector<DualQuaternion> coefficients;

  MotionPolynomial() = default;
  explicit MotionPolynomial(std::vector<DualQuaternion> c) : coefficients(std::move(c)) {}

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const DualQuaternion& leading() const { return coefficients.back(); }
  const DualQuaternion& operator[](std::size_t i) const { return coefficients[i]; }

  MotionPolynomial conjugate() const;
  MotionPolynomial scaled(double s) const;
};

// The monic linear polynomial t - h.
MotionPolynomial linear_factor(const DualQuaternion& h);

// Value at t; the leading coefficient at infinity.
DualQuaternion motionpoly_eval(const MotionPolynomial& c, MotionParameter t);
MotionPolynomial motionpoly_multiply(const MotionPolynomial& a, const MotionPolynomial& b);
MotionPolynomial motionpoly_add(const MotionPolynomial& a, const MotionPolynomial& b);

struct MotionDivision {
  MotionPolynomial quotient;
  MotionPolynomial remainder;  // degree below the divisor's
};

// a = quotient * divisor + remainder. The divisor's leading coefficient must
// have an invertible primal part (NonMonicDivisor otherwise).
MotionDivision motionpoly_right_divide(const MotionPolynomial& a, const MotionPolynomial& divisor,
                                       const Tolerances& tol = {});

// Coefficients of the Study quadric along the curve, ascending.
std::vector<double> study_polynomial(const MotionPolynomial& c);

// Primal scalar coefficients of c * conj(c), ascending. For a curve on the
// Study quadric this product is real.
std::vector<double> norm_polynomial(const MotionPolynomial& c);

// Largest coefficient-wise distance between two polynomials of equal degree,
// each scaled so its leading primal part has unit norm and matching sign.
double projective_polynomial_distance(const MotionPolynomial& a, const MotionPolynomial& b);

}  // namespace bennett
