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

#include "qrecycle/nspin.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qrecycle/legendre.hpp"

namespace qrecycle {
namespace {

void require_even_spins(int spins) {
  if (spins < 2 || spins % 2 != 0) {
    throw std::invalid_argument("optimal encoding needs an even number of spins >= 2, got " +
                                std::to_string(spins));
  }
}

void require_spins(int spins) {
  if (spins < 1) throw std::invalid_argument("number of spins must be >= 1");
}

void require_observers(int k) {
  if (k < 1) throw std::invalid_argument("observer count k must be >= 1");
}

constexpr double kThresholdSlack = 1e-12;
constexpr int kMaxSpins = 1 << 28;

// Smallest index i >= 1 with ok(i), assuming ok is monotone and eventually true.
template <typename Pred>
int monotone_search(Pred ok) {
  int hi = 1;
  while (!ok(hi)) {
    if (hi >= kMaxSpins) throw std::overflow_error("classical_threshold: search exceeded 2^28 spins");
    hi *= 2;
  }
  int lo = hi / 2;  // ok(lo) false unless hi == 1
  if (hi == 1) return 1;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

SymmetricTridiagonal JacobiMatrix::as_tridiagonal() const {
  return {std::vector<double>(dimension(), 0.0), off_diagonal};
}

JacobiMatrix jacobi_matrix(int spins) {
  require_even_spins(spins);
  JacobiMatrix m;
  m.spins = spins;
  const int max_j = spins / 2;
  m.off_diagonal.resize(static_cast<std::size_t>(max_j));
  for (int j = 0; j < max_j; ++j) {
    const double l = j + 1.0;
    m.off_diagonal[static_cast<std::size_t>(j)] = l / std::sqrt(4.0 * l * l - 1.0);
  }
  return m;
}

EigenPair principal_eigenpair(const JacobiMatrix& m) { return principal_eigenpair(m.as_tridiagonal()); }

EncodingSpec EncodingSpec::make(int spins, std::vector<double> phi) {
  require_even_spins(spins);
  if (phi.size() != static_cast<std::size_t>(spins / 2 + 1)) {
    throw std::invalid_argument("EncodingSpec: need N/2 + 1 coefficients");
  }
  const double norm2 = std::inner_product(phi.begin(), phi.end(), phi.begin(), 0.0);
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    throw std::invalid_argument("EncodingSpec: coefficients are not normalized");
  }
  return EncodingSpec{spins, std::move(phi)};
}

EncodingSpec optimal_encoding(int spins) {
  EigenPair pair = principal_eigenpair(jacobi_matrix(spins));
  return EncodingSpec::make(spins, std::move(pair.vector));
}

double quadratic_form(const JacobiMatrix& m, std::span<const double> phi) {
  if (phi.size() != m.dimension()) throw std::invalid_argument("quadratic_form: size mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < phi.size(); ++j) s += 2.0 * m.off_diagonal[j] * phi[j] * phi[j + 1];
  return s;
}

double parallel_tilde_delta(int spins) {
  require_spins(spins);
  return static_cast<double>(spins) / (spins + 2.0);
}

double fk_parallel(int spins, int k) {
  require_observers(k);
  return 0.5 * (1.0 + std::pow(parallel_tilde_delta(spins), k));
}

double optimal_tilde_delta(int spins) {
  require_even_spins(spins);
  return legendre_largest_zero(spins / 2 + 1);
}

double fk_optimal(int spins, int k) {
  require_observers(k);
  return 0.5 * (1.0 + std::pow(optimal_tilde_delta(spins), k));
}

double delta_k_parallel_start(int spins, int k) {
  require_observers(k);
  return parallel_tilde_delta(spins) * std::pow(optimal_tilde_delta(spins), k - 1);
}

double fk_asymptotic(int spins, int k) {
  require_observers(k);
  require_spins(spins);
  const double xi = bessel_j0_first_zero();
  const double base = 1.0 - 2.0 * xi * xi / (static_cast<double>(spins) * spins);
  if (!(base > 0.0)) {
    throw std::domain_error("fk_asymptotic: N too small for the large-N expansion");
  }
  return 0.5 * (1.0 + std::pow(base, k));
}

double chain_delta(std::span<const double> steps) {
  return std::accumulate(steps.begin(), steps.end(), 1.0, std::multiplies<>());
}

int classical_threshold(int k, double target_fidelity, EncodingKind encoding) {
  require_observers(k);
  if (!(target_fidelity > 0.5 && target_fidelity < 1.0)) {
    throw std::invalid_argument("classical_threshold: target fidelity must lie in (1/2, 1)");
  }
  if (encoding == EncodingKind::parallel) {
    return monotone_search([&](int n) { return fk_parallel(n, k) >= target_fidelity - kThresholdSlack; });
  }
  // Search over half the spin count so that only even N are visited.
  const int half = monotone_search(
      [&](int m) { return fk_optimal(2 * m, k) >= target_fidelity - kThresholdSlack; });
  return 2 * half;
}

}  // namespace qrecycle
