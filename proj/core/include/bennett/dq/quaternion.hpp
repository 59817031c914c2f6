#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace bennett {

// Hamilton quaternion w + x i + y j + z k. Not assumed unit length.
struct Quaternion {
  double w{0.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion from_parts(double scalar, const Eigen::Vector3d& v) {
    return {scalar, v.x(), v.y(), v.z()};
  }
  static Quaternion pure(const Eigen::Vector3d& v) { return from_parts(0.0, v); }

  Eigen::Vector3d vec() const { return {x, y, z}; }
  Eigen::Vector4d coeffs() const { return {w, x, y, z}; }

  constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
  constexpr double dot(const Quaternion& o) const {
    return w * o.w + x * o.x + y * o.y + z * o.z;
  }
  constexpr double norm_squared() const { return dot(*this); }
  double norm() const;
  // Multiplicative inverse; caller guarantees a non-zero quaternion.
  Quaternion inverse() const;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Rotation matrix of q / |q|.
Eigen::Matrix3d rotation_matrix(const Quaternion& q);
// Unit quaternion with w >= 0 for a proper rotation matrix.
Quaternion quaternion_from_rotation(const Eigen::Matrix3d& r);

}  // namespace bennett
