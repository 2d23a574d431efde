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

#ifndef QRECYCLE_QUBIT_CHAIN_HPP
#define QRECYCLE_QUBIT_CHAIN_HPP

#include <cmath>

#include "qrecycle/chain_record.hpp"
#include "qrecycle/random.hpp"
#include "qrecycle/sphere.hpp"

namespace qrecycle {

/// Qubit state as a Bloch vector with |r| <= 1 (+1e-12).
class BlochState {
 public:
  BlochState() = default;  // maximally mixed
  explicit BlochState(const Vec3& r);
  static BlochState pure(const UnitVector& n) { return BlochState(n.vec()); }

  const Vec3& r() const { return r_; }
  double length() const { return norm(r_); }
  bool is_pure(double tolerance = 1e-12) const { return std::abs(length() - 1.0) <= tolerance; }

 private:
  Vec3 r_{};
};

/// How the preparation |m_phi> is turned about the estimate m.
struct AzimuthPolicy {
  enum class Kind { fixed, random };
  Kind kind = Kind::random;
  double value = 0.0;  // radians, used when kind == fixed

  static AzimuthPolicy fixed(double azimuth) { return {Kind::fixed, azimuth}; }
  static AzimuthPolicy random() { return {Kind::random, 0.0}; }
};

/// Measure-and-prepare realization A(m) = sqrt(2) |m_phi><m| of the covariant
/// qubit POVM O(m) = 2|m><m|, where |m_phi> is tilted by `offset_angle` from
/// m. phi = 0 is the minimally disturbing choice, phi = pi re-prepares the
/// antipode of the estimate.
class QubitKrausFamily {
 public:
  /// Throws std::domain_error unless 0 <= offset_angle <= pi.
  explicit QubitKrausFamily(double offset_angle = 0.0, AzimuthPolicy azimuth = AzimuthPolicy::random());

  static QubitKrausFamily optimal() { return QubitKrausFamily(0.0); }
  static QubitKrausFamily worst();

  double offset_angle() const { return offset_angle_; }
  const AzimuthPolicy& azimuth_policy() const { return azimuth_; }

 private:
  double offset_angle_;
  AzimuthPolicy azimuth_;
};

/// Averaged action of one observer: r -> eta r.
class DepolarizingChannel {
 public:
  /// Throws std::domain_error unless -1/3 <= eta <= 1/3 (1e-15 slack).
  explicit DepolarizingChannel(double eta);
  /// Channel produced by a Kraus family with disturbance constant c.
  static DepolarizingChannel from_disturbance(double c);

  double eta() const { return eta_; }
  double disturbance() const { return 3.0 * eta_ + 1.0; }

 private:
  double eta_;
};

/// f(m, n) = (1 + m . n) / 2.
double single_qubit_fidelity(const UnitVector& m, const UnitVector& n);

/// F = (1 + Delta) / 2. Throws std::domain_error if |Delta| > 1.
double fidelity_from_delta(double delta);

/// c = integral dm |tr A(m)|^2 = 1 + cos(phi).
double disturbance_constant(const QubitKrausFamily& kraus);

/// eta = (c - 1) / 3. Throws std::domain_error outside c in [0, 2].
double eta_from_c(double c);

BlochState apply_depolarizing(const BlochState& s, const DepolarizingChannel& ch);

/// (1 + eta^k) / 2: the overlap of the k-th averaged posterior state with the
/// encoded direction. For eta = 1/3 this is also the k-th observer's
/// fidelity. Throws std::invalid_argument for k < 1.
double analytic_fk_single(int k, double eta);

/// Delta_k of the k-th observer's *estimate* when every observer uses a
/// family with shrink factor eta: the first k - 1 observers shrink the
/// Bloch vector by eta each and the k-th estimate sees a further 1/3, giving
/// eta^(k-1) / 3. Throws std::invalid_argument for k < 1.
double analytic_estimate_delta_single(int k, double eta);

struct ObserverOutcome {
  UnitVector estimate;
  UnitVector prepared;
};

/// Covariant POVM: the estimate has tilt cosine density (1 + x)/2 about the
/// incoming state with uniform azimuth; the outgoing state is the estimate
/// tilted by the family's offset angle.
ObserverOutcome simulate_observer_covariant(const UnitVector& state_dir, const QubitKrausFamily& kraus,
                                            RandomStream& rng);

/// Stern-Gerlach along a uniformly random axis a: outcome + with probability
/// (1 + a . state)/2, estimate +-a, and the projected state is passed on.
ObserverOutcome simulate_observer_sg(const UnitVector& state_dir, RandomStream& rng);

/// Stern-Gerlach with a given axis.
ObserverOutcome simulate_observer_sg(const UnitVector& state_dir, const UnitVector& axis, RandomStream& rng);

enum class MeasurementScheme { covariant, stern_gerlach };

/// Draws n uniformly and runs k observers on it in sequence. The Kraus family
/// is ignored by the Stern-Gerlach scheme, which always passes the projected
/// state on. Throws std::invalid_argument for k < 1.
ChainRecord simulate_chain_single(int k, const QubitKrausFamily& kraus, MeasurementScheme scheme,
                                  RandomStream& rng);

}  // namespace qrecycle

#endif  // QRECYCLE_QUBIT_CHAIN_HPP
