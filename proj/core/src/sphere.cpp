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

#include "qrecycle/sphere.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qrecycle {

UnitVector UnitVector::normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::domain_error("UnitVector: cannot normalize a zero or non-finite vector");
  }
  return UnitVector((1.0 / n) * v);
}

UnitVector UnitVector::checked(const Vec3& v, double tolerance) {
  const double n = norm(v);
  if (!(std::abs(n - 1.0) <= tolerance)) {
    throw std::domain_error("UnitVector: vector has norm " + std::to_string(n) + ", expected 1");
  }
  return normalized(v);
}

UnitVector UnitVector::spherical(double theta, double phi) {
  const double s = std::sin(theta);
  return normalized({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

UnitVector sample_uniform_sphere(RandomStream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector::normalized({r * std::cos(phi), r * std::sin(phi), z});
}

double cos_tilt_from_uniform(double u, int copies) {
  if (copies < 1) {
    throw std::invalid_argument("cos_tilt: number of copies must be >= 1");
  }
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error("cos_tilt: uniform variate outside [0, 1]");
  }
  return 2.0 * std::pow(u, 1.0 / (copies + 1)) - 1.0;
}

double sample_cos_tilt(RandomStream& rng, int copies) {
  return cos_tilt_from_uniform(rng.uniform_open_closed(), copies);
}

UnitVector rotate_towards(const UnitVector& axis, double cos_tilt, double azimuth) {
  if (!(cos_tilt >= -1.0 && cos_tilt <= 1.0)) {
    throw std::domain_error("rotate_towards: cos_tilt outside [-1, 1]");
  }
  const Vec3& a = axis.vec();
  const Vec3 ref = std::abs(a.x) > 0.9 ? Vec3{0.0, 1.0, 0.0} : Vec3{1.0, 0.0, 0.0};
  const Vec3 e1 = UnitVector::normalized(ref - dot(ref, a) * a).vec();
  const Vec3 e2 = cross(a, e1);
  const double s = std::sqrt(std::max(0.0, 1.0 - cos_tilt * cos_tilt));
  const Vec3 v = cos_tilt * a + (s * std::cos(azimuth)) * e1 + (s * std::sin(azimuth)) * e2;
  return UnitVector::normalized(v);
}

UnitVector rotate_towards(const Vec3& axis, double cos_tilt, double azimuth) {
  return rotate_towards(UnitVector::checked(axis), cos_tilt, azimuth);
}

}  // namespace qrecycle
