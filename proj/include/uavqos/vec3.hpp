#pragma once

#include <cmath>

namespace uavqos {

// Cartesian 3-vector. Units (m, m/s, m/s^2) follow from usage.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  [[nodiscard]] constexpr double squared_norm() const { return x * x + y * y + z * z; }
  [[nodiscard]] double norm() const { return std::sqrt(squared_norm()); }
  [[nodiscard]] bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
  [[nodiscard]] constexpr Vec3 horizontal() const { return {x, y, 0.0}; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Scales v down so its norm is at most limit. Direction is preserved.
inline Vec3 clamp_norm(const Vec3& v, double limit) {
  const double n = v.norm();
  if (n <= limit || n == 0.0) return v;
  return v * (limit / n);
}

}  // namespace uavqos
