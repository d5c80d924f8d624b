#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <string_view>

namespace gbc {

/// Point or vector in R^2 or R^3. Fixed capacity, so no heap traffic.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
/// Small square matrix, n = 2 or 3.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;

/// Relative geometric tolerance; multiply by the polytope diameter.
inline constexpr double kRelTol = 1e-9;

/// 90 degree counterclockwise rotation, [0 -1; 1 0] v.
inline Vec rot(const Vec& v) {
  Vec r(2);
  r << -v[1], v[0];
  return r;
}

/// The rotation matrix [0 -1; 1 0].
inline Mat rot_matrix() {
  Mat r(2, 2);
  r << 0.0, -1.0, 1.0, 0.0;
  return r;
}

inline Vec cross(const Vec& a, const Vec& b) {
  Vec r(3);
  r << a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0];
  return r;
}

/// Scalar 2D cross product a.x*b.y - a.y*b.x.
inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline double det3(const Vec& a, const Vec& b, const Vec& c) { return a.dot(cross(b, c)); }

inline Vec zeros(int n) { return Vec::Zero(n); }

/// Full (P) or trimmed (Pminus) polynomial form family.
enum class Family { P, Pminus };

constexpr std::string_view to_string(Family f) { return f == Family::P ? "P" : "Pminus"; }

}  // namespace gbc
