#pragma once

#include <array>

#include "bennett/dq/quaternion.hpp"

namespace bennett {

// h = p + eps q with eps^2 = 0. Study parameters are [p0..p3, q0..q3].
// A rigid displacement is any non-zero h with p.q == 0, up to scale.
struct DualQuaternion {
  Quaternion primal{};
  Quaternion dual{};

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(const Quaternion& p, const Quaternion& q) : primal(p), dual(q) {}

  static constexpr DualQuaternion identity() { return {Quaternion::identity(), Quaternion{}}; }
  static constexpr DualQuaternion real(double s) { return {{s, 0, 0, 0}, {}}; }
  static DualQuaternion from_study(const std::array<double, 8>& s);

  std::array<double, 8> study() const;

  // Quaternion conjugate applied to both parts.
  constexpr DualQuaternion conjugate() const { return {primal.conjugate(), dual.conjugate()}; }
  // Sum of squares of all eight Study parameters.
  constexpr double squared_length() const {
    return primal.norm_squared() + dual.norm_squared();
  }
  // Requires an invertible primal part.
  DualQuaternion inverse() const;
  // Unit primal part with a canonical sign (first non-zero primal entry positive).
  DualQuaternion normalized() const;

  constexpr DualQuaternion operator-() const { return {-primal, -dual}; }
  constexpr DualQuaternion& operator+=(const DualQuaternion& o) {
    primal += o.primal;
    dual += o.dual;
    return *this;
  }
  constexpr DualQuaternion& operator-=(const DualQuaternion& o) {
    primal -= o.primal;
    dual -= o.dual;
    return *this;
  }
  constexpr DualQuaternion& operator*=(double s) {
    primal *= s;
    dual *= s;
    return *this;
  }
};

constexpr DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
constexpr DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
constexpr DualQuaternion operator*(DualQuaternion a, double s) { return a *= s; }
constexpr DualQuaternion operator*(double s, DualQuaternion a) { return a *= s; }

constexpr DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
  return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
}

inline DualQuaternion dq_multiply(const DualQuaternion& a, const DualQuaternion& b) {
  return a * b;
}

// Study quadric value p.q.
double study_residual(const DualQuaternion& h);
// Polar form of the Study quadric: (a.p . b.q + b.p . a.q) / 2.
double study_bilinear(const DualQuaternion& a, const DualQuaternion& b);

// Max componentwise distance between two projective points after bringing
// both to unit primal part with matching sign.
double projective_distance(const DualQuaternion& a, const DualQuaternion& b);

}  // namespace bennett
