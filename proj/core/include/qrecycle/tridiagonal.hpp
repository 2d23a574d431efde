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

#ifndef QRECYCLE_TRIDIAGONAL_HPP
#define QRECYCLE_TRIDIAGONAL_HPP

#include <span>
#include <vector>

namespace qrecycle {

/// Real symmetric tridiagonal matrix: diagonal of length n, off-diagonal of
/// length n - 1 (entry i couples rows i and i + 1).
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t dimension() const { return diagonal.size(); }

  /// y = A x.
  std::vector<double> multiply(std::span<const double> x) const;
};

/// Number of eigenvalues strictly below `sigma`, from the sign changes of the
/// Sturm sequence (LDL^T pivots of A - sigma I).
std::size_t count_eigenvalues_below(const SymmetricTridiagonal& a, double sigma);

/// Largest eigenvalue by bisection on the Sturm count, starting from the
/// Gershgorin interval. Bisection runs until the bracket cannot shrink in
/// double precision.
double largest_eigenvalue(const SymmetricTridiagonal& a);

/// Solves (A - shift I) y = b by Gaussian elimination with partial pivoting.
/// Exactly singular pivots are perturbed to a tiny multiple of |A|, which is
/// the intended behaviour when the shift is an eigenvalue.
std::vector<double> solve_shifted(const SymmetricTridiagonal& a, double shift,
                                  std::span<const double> b);

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm
};

/// Largest eigenvalue by bisection, eigenvector by inverse iteration at that
/// shift. The vector is normalized and signed so that its entries sum to a
/// positive number. Throws std::runtime_error if the residual |Av - lv| has
/// not dropped below `residual_tolerance` within the iteration cap.
EigenPair principal_eigenpair(const SymmetricTridiagonal& a, double residual_tolerance = 1e-12);

}  // namespace qrecycle

#endif  // QRECYCLE_TRIDIAGONAL_HPP
