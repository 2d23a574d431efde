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

#include "qrecycle/qubit_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrecycle {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_observers(int k) {
  if (k < 1) throw std::invalid_argument("observer count k must be >= 1");
}

}  // namespace

BlochState::BlochState(const Vec3& r) : r_(r) {
  if (!(norm(r) <= 1.0 + 1e-12)) {
    throw std::domain_error("BlochState: Bloch vector longer than 1");
  }
}

QubitKrausFamily::QubitKrausFamily(double offset_angle, AzimuthPolicy azimuth)
    : offset_angle_(offset_angle), azimuth_(azimuth) {
  if (!(offset_angle >= 0.0 && offset_angle <= std::numbers::pi)) {
    throw std::domain_error("QubitKrausFamily: offset angle must lie in [0, pi]");
  }
}

QubitKrausFamily QubitKrausFamily::worst() { return QubitKrausFamily(std::numbers::pi); }

DepolarizingChannel::DepolarizingChannel(double eta) : eta_(eta) {
  if (!(eta >= -1.0 / 3.0 - 1e-15 && eta <= 1.0 / 3.0 + 1e-15)) {
    throw std::domain_error("DepolarizingChannel: shrink factor must lie in [-1/3, 1/3]");
  }
}

DepolarizingChannel DepolarizingChannel::from_disturbance(double c) {
  return DepolarizingChannel(eta_from_c(c));
}

double single_qubit_fidelity(const UnitVector& m, const UnitVector& n) {
  return std::clamp(0.5 * (1.0 + dot(m, n)), 0.0, 1.0);
}

double fidelity_from_delta(double delta) {
  if (!(std::abs(delta) <= 1.0)) {
    throw std::domain_error("fidelity_from_delta: |Delta| must not exceed 1");
  }
  return 0.5 * (1.0 + delta);
}

double disturbance_constant(const QubitKrausFamily& kraus) {
  // |tr sqrt(2)|m_phi><m|| ^2 = 2 |<m|m_phi>|^2 = 2 cos^2(phi/2), constant in m.
  return 1.0 + std::cos(kraus.offset_angle());
}

double eta_from_c(double c) {
  if (!(c >= 0.0 && c <= 2.0)) {
    throw std::domain_error("eta_from_c: disturbance constant must lie in [0, 2]");
  }
  return (c - 1.0) / 3.0;
}

BlochState apply_depolarizing(const BlochState& s, const DepolarizingChannel& ch) {
  return BlochState(ch.eta() * s.r());
}

double analytic_fk_single(int k, double eta) {
  require_observers(k);
  return 0.5 * (1.0 + std::pow(eta, k));
}

double analytic_estimate_delta_single(int k, double eta) {
  require_observers(k);
  return std::pow(eta, k - 1) / 3.0;
}

ObserverOutcome simulate_observer_covariant(const UnitVector& state_dir, const QubitKrausFamily& kraus,
                                            RandomStream& rng) {
  const double x = sample_cos_tilt(rng, 1);
  const UnitVector estimate = rotate_towards(state_dir, x, kTwoPi * rng.uniform());
  const double phi = kraus.offset_angle();
  if (phi == 0.0) return {estimate, estimate};
  const AzimuthPolicy& policy = kraus.azimuth_policy();
  const double azimuth = policy.kind == AzimuthPolicy::Kind::random ? kTwoPi * rng.uniform() : policy.value;
  return {estimate, rotate_towards(estimate, std::cos(phi), azimuth)};
}

ObserverOutcome simulate_observer_sg(const UnitVector& state_dir, const UnitVector& axis, RandomStream& rng) {
  const double p_plus = 0.5 * (1.0 + dot(axis, state_dir));
  const UnitVector estimate = rng.uniform() < p_plus ? axis : -axis;
  return {estimate, estimate};
}

ObserverOutcome simulate_observer_sg(const UnitVector& state_dir, RandomStream& rng) {
  const UnitVector axis = sample_uniform_sphere(rng);
  return simulate_observer_sg(state_dir, axis, rng);
}

ChainRecord simulate_chain_single(int k, const QubitKrausFamily& kraus, MeasurementScheme scheme,
                                  RandomStream& rng) {
  require_observers(k);
  ChainRecord record;
  record.true_direction = sample_uniform_sphere(rng);
  record.estimates.reserve(static_cast<std::size_t>(k));
  record.dots.reserve(static_cast<std::size_t>(k));
  record.posterior_dots.reserve(static_cast<std::size_t>(k));

  UnitVector state = record.true_direction;
  for (int j = 0; j < k; ++j) {
    const ObserverOutcome out = scheme == MeasurementScheme::covariant
                                    ? simulate_observer_covariant(state, kraus, rng)
                                    : simulate_observer_sg(state, rng);
    record.estimates.push_back(out.estimate);
    record.dots.push_back(std::clamp(dot(record.true_direction, out.estimate), -1.0, 1.0));
    record.posterior_dots.push_back(std::clamp(dot(record.true_direction, out.prepared), -1.0, 1.0));
    state = out.prepared;
  }
  return record;
}

}  // namespace qrecycle
