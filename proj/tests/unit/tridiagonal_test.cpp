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

#include "qrecycle/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "qrecycle/random.hpp"

namespace qrecycle {
namespace {

Eigen::MatrixXd dense(const SymmetricTridiagonal& a) {
  const auto n = static_cast<Eigen::Index>(a.dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = a.diagonal[static_cast<std::size_t>(i)];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = a.off_diagonal[static_cast<std::size_t>(i)];
  }
  return m;
}

SymmetricTridiagonal random_tridiagonal(std::size_t n, RandomStream& rng) {
  SymmetricTridiagonal a;
  for (std::size_t i = 0; i < n; ++i) a.diagonal.push_back(2.0 * rng.uniform() - 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) a.off_diagonal.push_back(2.0 * rng.uniform() - 1.0);
  return a;
}

TEST(SturmCount, MatchesDenseSpectrum) {
  RandomStream rng(42, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const SymmetricTridiagonal a = random_tridiagonal(3 + trial, rng);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense(a)).eigenvalues();
    for (double sigma : {-1.5, -0.3, 0.0, 0.41, 1.2}) {
      std::size_t below = 0;
      for (Eigen::Index i = 0; i < ev.size(); ++i) below += ev(i) < sigma ? 1 : 0;
      EXPECT_EQ(count_eigenvalues_below(a, sigma), below);
    }
  }
}

TEST(LargestEigenvalue, MatchesDenseSolver) {
  RandomStream rng(42, 11);
  for (int trial = 0; trial < 30; ++trial) {
    const SymmetricTridiagonal a = random_tridiagonal(1 + trial, rng);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense(a)).eigenvalues();
    EXPECT_NEAR(largest_eigenvalue(a), ev.maxCoeff(), 1e-13);
  }
}

TEST(SolveShifted, MatchesDenseSolveIncludingPivotedRows) {
  RandomStream rng(42, 12);
  for (int trial = 0; trial < 20; ++trial) {
    SymmetricTridiagonal a = random_tridiagonal(2 + trial, rng);
    // Small diagonal forces row interchanges.
    for (double& d : a.diagonal) d *= 1e-3;
    const double shift = 0.1;
    std::vector<double> b(a.dimension());
    for (double& v : b) v = rng.uniform();
    const std::vector<double> x = solve_shifted(a, shift, b);
    Eigen::MatrixXd m = dense(a);
    m.diagonal().array() -= shift;
    const Eigen::VectorXd ref = m.fullPivLu().solve(Eigen::Map<const Eigen::VectorXd>(b.data(), b.size()));
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], ref(static_cast<Eigen::Index>(i)), 1e-9);
  }
}

TEST(PrincipalEigenpair, ResidualAndSign) {
  RandomStream rng(42, 13);
  for (int trial = 0; trial < 10; ++trial) {
    SymmetricTridiagonal a = random_tridiagonal(5 + 10 * trial, rng);
    for (double& e : a.off_diagonal) e = std::abs(e) + 0.05;  // irreducible, nonnegative
    const EigenPair p = principal_eigenpair(a);
    const std::vector<double> av = a.multiply(p.vector);
    double r = 0.0, nrm = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) {
      r += std::pow(av[i] - p.value * p.vector[i], 2);
      nrm += p.vector[i] * p.vector[i];
    }
    EXPECT_LT(std::sqrt(r), 1e-12);
    EXPECT_NEAR(nrm, 1.0, 1e-13);
    for (double c : p.vector) EXPECT_GT(c, 0.0);  // Perron vector
  }
}

TEST(PrincipalEigenpair, RejectsInconsistentShape) {
  SymmetricTridiagonal bad{{1.0, 2.0}, {}};
  EXPECT_THROW(principal_eigenpair(bad), std::invalid_argument);
  EXPECT_THROW(count_eigenvalues_below(SymmetricTridiagonal{}, 0.0), std::invalid_argument);
}

TEST(PrincipalEigenpair, OneByOne) {
  const EigenPair p = principal_eigenpair(SymmetricTridiagonal{{0.7}, {}});
  EXPECT_NEAR(p.value, 0.7, 1e-15);
  ASSERT_EQ(p.vector.size(), 1u);
  EXPECT_NEAR(p.vector[0], 1.0, 1e-15);
}

}  // namespace
}  // namespace qrecycle
