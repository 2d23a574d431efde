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

#ifndef QRECYCLE_NSPIN_HPP
#define QRECYCLE_NSPIN_HPP

#include <optional>
#include <span>
#include <vector>

#include "qrecycle/chain_record.hpp"
#include "qrecycle/random.hpp"
#include "qrecycle/tridiagonal.hpp"

namespace qrecycle {

/// Symmetric tridiagonal matrix with zero diagonal on the basis |J,0>,
/// J = 0..N/2. Entry (J, J+1) is (J+1) / sqrt(4 (J+1)^2 - 1).
///
/// This is the Jacobi matrix of the orthonormal Legendre polynomials, so its
/// eigenvalues are the zeros of P_{N/2+1}.
struct JacobiMatrix {
  int spins = 0;
  std::vector<double> off_diagonal;

  std::size_t dimension() const { return off_diagonal.size() + 1; }
  SymmetricTridiagonal as_tridiagonal() const;
};

/// Throws std::invalid_argument unless N is even and >= 2.
JacobiMatrix jacobi_matrix(int spins);

/// Largest eigenvalue and its (positive) eigenvector.
EigenPair principal_eigenpair(const JacobiMatrix& m);

/// Fiducial state sum_J phi[J] |J,0> of N spins.
struct EncodingSpec {
  int spins = 0;
  std::vector<double> phi;

  /// Validates N even >= 2, phi.size() == N/2 + 1 and sum phi_J^2 = 1 within
  /// 1e-12. Throws std::invalid_argument.
  static EncodingSpec make(int spins, std::vector<double> phi);

  std::size_t max_j() const { return phi.size() - 1; }
};

/// Principal eigenvector of jacobi_matrix(N); all entries positive.
EncodingSpec optimal_encoding(int spins);

/// phi^T M phi.
double quadratic_form(const JacobiMatrix& m, std::span<const double> phi);

/// N / (N + 2): shrink per step for N parallel copies. N >= 1.
double parallel_tilde_delta(int spins);

/// (1 + (N/(N+2))^k) / 2.
double fk_parallel(int spins, int k);

/// Largest zero of P_{N/2+1}; N even >= 2.
double optimal_tilde_delta(int spins);

/// (1 + x_{N/2+1}^k) / 2.
double fk_optimal(int spins, int k);

/// N/(N+2) x_{N/2+1}^(k-1): parallel copies measured first, optimal
/// measure-and-prepare from the second observer on.
double delta_k_parallel_start(int spins, int k);

/// (1 + (1 - 2 xi0^2 / N^2)^k) / 2. Throws std::domain_error when the base is
/// not positive (N <= 3).
double fk_asymptotic(int spins, int k);

/// Product of per-step shrink factors; 1 for an empty list.
double chain_delta(std::span<const double> steps);

enum class EncodingKind { parallel, optimal };

/// Smallest N (even for the optimal encoding) with F_k(N) >= target_fidelity,
/// comparing with 1e-12 absolute slack so that exact thresholds such as
/// F_1(N=1) = 2/3 are not lost to rounding. Throws std::invalid_argument
/// unless 1/2 < target < 1 and k >= 1.
int classical_threshold(int k, double target_fidelity, EncodingKind encoding);

}  // namespace qrecycle

#endif  // QRECYCLE_NSPIN_HPP
