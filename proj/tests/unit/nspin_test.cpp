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
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "qrecycle/legendre.hpp"

namespace qrecycle {
namespace {

double sum_of_squares(const std::vector<double>& v) { return std::inner_product(v.begin(), v.end(), v.begin(), 0.0); }

TEST(JacobiMatrix, Examples) {
  const JacobiMatrix m2 = jacobi_matrix(2);
  ASSERT_EQ(m2.dimension(), 2u);
  EXPECT_NEAR(m2.off_diagonal[0], 1.0 / std::sqrt(3.0), 1e-15);
  const JacobiMatrix m4 = jacobi_matrix(4);
  ASSERT_EQ(m4.dimension(), 3u);
  EXPECT_NEAR(m4.off_diagonal[1], 2.0 / std::sqrt(15.0), 1e-15);
  for (double b : jacobi_matrix(400).off_diagonal) {
    EXPECT_GT(b, 0.5);
    EXPECT_LT(b, 0.58);
  }
}

TEST(JacobiMatrix, RejectsOddOrSmall) {
  EXPECT_THROW(jacobi_matrix(3), std::invalid_argument);
  EXPECT_THROW(jacobi_matrix(0), std::invalid_argument);
  EXPECT_THROW(jacobi_matrix(-2), std::invalid_argument);
}

TEST(PrincipalEigenpair, TwoSpins) {
  const EigenPair p = principal_eigenpair(jacobi_matrix(2));
  EXPECT_NEAR(p.value, 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(p.vector[0], std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(p.vector[1], std::sqrt(0.5), 1e-14);
}

TEST(PrincipalEigenpair, FourSpins) {
  const EigenPair p = principal_eigenpair(jacobi_matrix(4));
  EXPECT_NEAR(p.value, std::sqrt(0.6), 1e-14);
  EXPECT_NEAR(p.vector[0], 0.52704627669473, 1e-13);
  EXPECT_NEAR(p.vector[1], std::sqrt(0.5), 1e-13);
  EXPECT_NEAR(p.vector[2], 0.47140452079103, 1e-13);
}

TEST(PrincipalEigenpair, MatchesDenseSolver) {
  for (int n = 2; n <= 80; n += 2) {
    const JacobiMatrix m = jacobi_matrix(n);
    const int d = static_cast<int>(m.dimension());
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j + 1 < d; ++j) dense(j, j + 1) = dense(j + 1, j) = m.off_diagonal[static_cast<std::size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    Eigen::VectorXd ref = solver.eigenvectors().col(d - 1);
    if (ref.sum() < 0) ref = -ref;
    const EigenPair p = principal_eigenpair(m);
    EXPECT_NEAR(p.value, solver.eigenvalues()(d - 1), 1e-13) << "N=" << n;
    for (int j = 0; j < d; ++j) EXPECT_NEAR(p.vector[static_cast<std::size_t>(j)], ref(j), 1e-11) << "N=" << n;
  }
}

// The principal vector is proportional to sqrt(2J+1) P_J(lambda_max).
TEST(PrincipalEigenpair, ChristoffelForm) {
  for (int n : {2, 6, 20, 64, 200, 500}) {
    const EigenPair p = principal_eigenpair(jacobi_matrix(n));
    const LegendreTable t = legendre_all(n / 2, p.value);
    std::vector<double> ref(t.values.size());
    for (std::size_t j = 0; j < ref.size(); ++j) ref[j] = std::sqrt(2.0 * j + 1.0) * t.values[j];
    const double s = std::sqrt(sum_of_squares(ref));
    for (std::size_t j = 0; j < ref.size(); ++j) EXPECT_NEAR(p.vector[j], ref[j] / s, 1e-10) << "N=" << n;
  }
}

TEST(PrincipalEigenpair, EigenvalueIsLargestLegendreZero) {
  for (int n = 2; n <= 200; n += 2) {
    const JacobiMatrix m = jacobi_matrix(n);
    const EigenPair p = principal_eigenpair(m);
    EXPECT_NEAR(p.value, legendre_largest_zero(n / 2 + 1), 1e-13) << "N=" << n;
    EXPECT_NEAR(sum_of_squares(p.vector), 1.0, 1e-12);
    EXPECT_NEAR(quadratic_form(m, p.vector), p.value, 1e-12);
  }
}

TEST(PrincipalEigenpair, LargeN) {
  const JacobiMatrix m = jacobi_matrix(2000);
  const EigenPair p = principal_eigenpair(m);
  EXPECT_NEAR(p.value, legendre_largest_zero(1001), 1e-13);
  const std::vector<double> mv = m.as_tridiagonal().multiply(p.vector);
  double resid = 0.0;
  for (std::size_t j = 0; j < mv.size(); ++j) resid = std::max(resid, std::abs(mv[j] - p.value * p.vector[j]));
  EXPECT_LT(resid, 1e-12);
}

TEST(PrincipalEigenpair, ComponentsPositive) {
  const EigenPair p = principal_eigenpair(jacobi_matrix(100));
  for (double v : p.vector) EXPECT_GT(v, 0.0);
}

TEST(EncodingSpec, Validation) {
  EXPECT_NO_THROW(EncodingSpec::make(2, {1.0, 0.0}));
  EXPECT_THROW(EncodingSpec::make(2, {1.0, 0.1}), std::invalid_argument);
  EXPECT_THROW(EncodingSpec::make(2, {1.0}), std::invalid_argument);
  EXPECT_THROW(EncodingSpec::make(3, {1.0, 0.0}), std::invalid_argument);
  EXPECT_EQ(optimal_encoding(10).max_j(), 5u);
}

TEST(QuadraticForm, SizeMismatchThrows) {
  const std::vector<double> phi{1.0};
  EXPECT_THROW(quadratic_form(jacobi_matrix(2), phi), std::invalid_argument);
}

TEST(ClosedForms, ParallelExamples) {
  EXPECT_NEAR(parallel_tilde_delta(1), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(parallel_tilde_delta(2), 0.5, 1e-16);
  EXPECT_NEAR(fk_parallel(1, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(fk_parallel(2, 2), 0.625, 1e-15);
  EXPECT_NEAR(fk_parallel(10, 1), 11.0 / 12.0, 1e-15);
  EXPECT_THROW(parallel_tilde_delta(0), std::invalid_argument);
  EXPECT_THROW(fk_parallel(2, 0), std::invalid_argument);
}

TEST(ClosedForms, OptimalExamples) {
  EXPECT_NEAR(optimal_tilde_delta(2), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(optimal_tilde_delta(4), std::sqrt(0.6), 1e-15);
  EXPECT_NEAR(optimal_tilde_delta(20), 0.978228658146056992803938001123, 1e-15);
  EXPECT_NEAR(fk_optimal(2, 1), 0.5 * (1.0 + 1.0 / std::sqrt(3.0)), 1e-15);
  EXPECT_THROW(optimal_tilde_delta(5), std::invalid_argument);
}

TEST(ClosedForms, MixedStart) {
  EXPECT_NEAR(delta_k_parallel_start(4, 2), 0.516397779494322, 1e-14);
  EXPECT_NEAR(delta_k_parallel_start(4, 1), 2.0 / 3.0, 1e-15);
  for (int n = 2; n <= 40; n += 2) {
    for (int k = 1; k <= 6; ++k) {
      EXPECT_GE(delta_k_parallel_start(n, k), std::pow(parallel_tilde_delta(n), k) - 1e-15);
      EXPECT_LE(delta_k_parallel_start(n, k), std::pow(optimal_tilde_delta(n), k) + 1e-15);
    }
  }
}

TEST(ClosedForms, OptimalBeatsParallelAndImprovesWithN) {
  double prev_opt = 0.0, prev_par = 0.0;
  for (int n = 2; n <= 200; n += 2) {
    const double opt = optimal_tilde_delta(n);
    const double par = parallel_tilde_delta(n);
    EXPECT_GT(opt, par) << "N=" << n;
    EXPECT_GT(opt, prev_opt);
    EXPECT_GT(par, prev_par);
    EXPECT_LT(opt, 1.0);
    prev_opt = opt;
    prev_par = par;
    for (int k = 1; k < 5; ++k) EXPECT_GT(fk_optimal(n, k), fk_optimal(n, k + 1));
  }
}

TEST(ClosedForms, ScaledGapApproachesBesselZero) {
  const double xi2 = bessel_j0_first_zero() * bessel_j0_first_zero();
  EXPECT_NEAR(xi2, 5.78318596294678, 1e-13);
  const struct {
    int spins;
    double gap;
  } cases[] = {{20, 5.26866}, {50, 5.56253}, {100, 5.67023}, {200, 5.72603}};
  double prev = 0.0;
  for (const auto& c : cases) {
    const double n = c.spins / 2 + 1.0;
    const double g = (1.0 - optimal_tilde_delta(c.spins)) * 2.0 * n * n;
    EXPECT_NEAR(g, c.gap, 1e-5) << "N=" << c.spins;
    EXPECT_GT(g, prev);
    EXPECT_LT(g, xi2);
    prev = g;
  }
}

TEST(FkAsymptotic, Examples) {
  EXPECT_NEAR(fk_optimal(200, 1) - fk_asymptotic(200, 1), 4.249e-6, 1e-8);
  EXPECT_LT(std::abs(fk_optimal(200, 1) - fk_asymptotic(200, 1)), 5e-6);
  const double f4 = fk_asymptotic(4, 1);
  EXPECT_GT(f4, 0.5);
  EXPECT_LT(f4, 1.0);
  EXPECT_THROW(fk_asymptotic(3, 1), std::domain_error);
  EXPECT_THROW(fk_asymptotic(100, 0), std::invalid_argument);
}

TEST(ChainDelta, Examples) {
  const std::vector<double> thirds{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  EXPECT_NEAR(chain_delta(thirds), 1.0 / 27.0, 1e-17);
  EXPECT_EQ(chain_delta(std::vector<double>{}), 1.0);
  const std::vector<double> mixed{0.5, -0.4, 0.25};
  EXPECT_NEAR(chain_delta(mixed), -0.05, 1e-17);
}

TEST(ClassicalThreshold, Examples) {
  const int ks[] = {1, 4, 16, 64, 256};
  const int par[] = {8, 35, 143, 573, 2294};
  const int opt[] = {6, 12, 26, 56, 114};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(classical_threshold(ks[i], 0.9, EncodingKind::parallel), par[i]) << "k=" << ks[i];
    EXPECT_EQ(classical_threshold(ks[i], 0.9, EncodingKind::optimal), opt[i]) << "k=" << ks[i];
  }
}

TEST(ClassicalThreshold, IsMinimal) {
  for (int k : {1, 3, 10, 40}) {
    for (double f : {0.6, 0.8, 0.95}) {
      const int np = classical_threshold(k, f, EncodingKind::parallel);
      EXPECT_GE(fk_parallel(np, k), f - 1e-12);
      if (np > 1) EXPECT_LT(fk_parallel(np - 1, k), f);
      const int no = classical_threshold(k, f, EncodingKind::optimal);
      EXPECT_EQ(no % 2, 0);
      EXPECT_GE(fk_optimal(no, k), f - 1e-12);
      if (no > 2) EXPECT_LT(fk_optimal(no - 2, k), f);
    }
  }
}

TEST(ClassicalThreshold, RejectsBadTarget) {
  EXPECT_THROW(classical_threshold(1, 0.5, EncodingKind::parallel), std::invalid_argument);
  EXPECT_THROW(classical_threshold(1, 1.0, EncodingKind::optimal), std::invalid_argument);
  EXPECT_THROW(classical_threshold(0, 0.9, EncodingKind::optimal), std::invalid_argument);
}

}  // namespace
}  // namespace qrecycle
