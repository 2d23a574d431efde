// Copyright 2026 The qrecycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRECYCLE_SPHERE_HPP
#define QRECYCLE_SPHERE_HPP

#include <cmath>

#include "qrecycle/random.hpp"

namespace qrecycle {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// A direction on the 2-sphere. Every constructor leaves |v| = 1 to within
/// 1e-12.
class UnitVector {
 public:
  /// Defaults to +z.
  UnitVector() = default;

  /// Rescales `v` onto the sphere. Throws std::domain_error for a zero or
  /// non-finite vector.
  static UnitVector normalized(const Vec3& v);

  /// Accepts `v` only if it already has unit norm within `tolerance`, then
  /// renormalizes. Throws std::domain_error otherwise.
  static UnitVector checked(const Vec3& v, double tolerance = 1e-12);

  /// Polar angle theta from +z, azimuth phi from +x.
  static UnitVector spherical(double theta, double phi);

  static UnitVector unit_x() { return UnitVector(Vec3{1.0, 0.0, 0.0}); }
  static UnitVector unit_y() { return UnitVector(Vec3{0.0, 1.0, 0.0}); }
  static UnitVector unit_z() { return UnitVector(Vec3{0.0, 0.0, 1.0}); }

  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }

  UnitVector operator-() const { return UnitVector(Vec3{-v_.x, -v_.y, -v_.z}); }
  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  explicit UnitVector(const Vec3& v) : v_(v) {}
  Vec3 v_{0.0, 0.0, 1.0};
};

inline double dot(const UnitVector& a, const UnitVector& b) { return dot(a.vec(), b.vec()); }

/// Draws a direction from the rotation-invariant measure
/// dn = sin(theta) dtheta dphi / (4 pi).
UnitVector sample_uniform_sphere(RandomStream& rng);

/// Inverse CDF of the tilt cosine for a covariant measurement on N parallel
/// copies: density (N+1)((1+x)/2)^N / 2 on [-1, 1], CDF ((1+x)/2)^(N+1).
/// `u` must lie in [0, 1]. Throws std::invalid_argument for N = 0.
double cos_tilt_from_uniform(double u, int copies);

/// Draws x = cos(angle between state and estimate) for N parallel copies.
/// N = 1 is the single-qubit covariant POVM O(m) = 2|m><m|.
double sample_cos_tilt(RandomStream& rng, int copies);

/// Returns the direction at tilt cosine `cos_tilt` from `axis`, turned by
/// `azimuth` about it.
///
/// The azimuth origin is e1 = unit projection of the global +x onto the plane
/// orthogonal to `axis` (global +y when |axis . x| > 0.9), and e2 = axis x e1,
/// so (e1, e2, axis) is right-handed. Only the tilt is physically meaningful.
/// Throws std::domain_error if cos_tilt is outside [-1, 1].
UnitVector rotate_towards(const UnitVector& axis, double cos_tilt, double azimuth);

/// Raw-vector overload; throws std::domain_error if `axis` is not unit norm
/// within 1e-12.
UnitVector rotate_towards(const Vec3& axis, double cos_tilt, double azimuth);

}  // namespace qrecycle

#endif  // QRECYCLE_SPHERE_HPP
