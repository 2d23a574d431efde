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

#include "qrecycle/legendre.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace qrecycle {
namespace {

// Power series J0(x) = sum_m (-1)^m (x/2)^(2m) / (m!)^2, enough terms for x < 4.
double bessel_j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 40; ++m) {
    term *= -q / (static_cast<double>(m) * m);
    sum += term;
  }
  return sum;
}

double bessel_j0_root_by_bisection() {
  double lo = 2.0, hi = 3.0;  // J0(2) > 0 > J0(3)
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (bessel_j0_series(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(LegendreAll, ValuesAtOne) {
  const LegendreTable t = legendre_all(3, 1.0);
  ASSERT_EQ(t.max_degree(), 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(t[n], 1.0);
}

TEST(LegendreAll, KnownRoots) {
  EXPECT_NEAR(legendre_all(2, 1.0 / std::sqrt(3.0))[2], 0.0, 1e-14);
  EXPECT_NEAR(legendre_all(3, std::sqrt(3.0 / 5.0))[3], 0.0, 1e-14);
}

TEST(LegendreAll, MatchesClosedFormsAndIsBounded) {
  for (double x = -1.0; x <= 1.0; x += 0.01) {
    const LegendreTable t = legendre_all(40, x);
    EXPECT_EQ(t[0], 1.0);
    EXPECT_NEAR(t[2], 0.5 * (3 * x * x - 1), 1e-15);
    EXPECT_NEAR(t[3], 0.5 * (5 * x * x * x - 3 * x), 1e-15);
    EXPECT_NEAR(t[4], (35 * std::pow(x, 4) - 30 * x * x + 3) / 8, 1e-14);
    for (int n = 0; n <= 40; ++n) ASSERT_LE(std::abs(t[n]), 1.0 + 1e-14);
  }
}

TEST(LegendreAll, Errors) {
  EXPECT_THROW(legendre_all(3, 1.0 + 1e-9), std::domain_error);
  EXPECT_THROW(legendre_all(-1, 0.0), std::invalid_argument);
  EXPECT_EQ(legendre_all(0, 0.3).values.size(), 1u);
}

TEST(LegendreLargestZero, SmallDegrees) {
  EXPECT_EQ(legendre_largest_zero(1), 0.0);
  EXPECT_NEAR(legendre_largest_zero(2), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(legendre_largest_zero(3), std::sqrt(3.0 / 5.0), 1e-15);
  // Largest zero of P_4: sqrt(3/7 + 2/7 sqrt(6/5)).
  EXPECT_NEAR(legendre_largest_zero(4), std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0)), 1e-15);
  EXPECT_THROW(legendre_largest_zero(0), std::invalid_argument);
}

TEST(LegendreLargestZero, HighPrecisionReferenceValues) {
  // Computed with 50-digit arithmetic (mpmath, independent recurrence).
  EXPECT_NEAR(legendre_largest_zero(11), 0.978228658146056992803938001123, 1e-15);
  EXPECT_NEAR(legendre_largest_zero(101), 0.99971933952977027576839860505636, 1e-15);
  EXPECT_NEAR(legendre_largest_zero(10000), 0.99999997108696172481162186221249, 1e-15);
}

TEST(LegendreLargestZero, IsARootForDegreesUpTo200) {
  for (int n = 2; n <= 200; ++n) {
    const double x = legendre_largest_zero(n);
    EXPECT_NEAR(legendre_all(n, x)[n], 0.0, 1e-11) << "n = " << n;
  }
}

TEST(LegendreLargestZero, StrictlyIncreasing) {
  double previous = -1.0;
  for (int n = 1; n <= 500; ++n) {
    const double x = legendre_largest_zero(n);
    ASSERT_GT(x, previous) << "n = " << n;
    previous = x;
  }
}

TEST(LegendreLargestZero, ConvergesUpToDegreeTenThousand) {
  for (int n : {500, 1000, 2500, 5000, 7500, 10000}) {
    const double x = legendre_largest_zero(n);
    const LegendreValue v = legendre_value(n, x);
    // |P_n| scaled by the slope near the root gives the root error.
    EXPECT_LT(std::abs(v.p / legendre_derivative(n, x, v)), 1e-13) << "n = " << n;
    EXPECT_LT(x, 1.0);
  }
}

TEST(LegendreLargestZero, ScaledGapApproachesBesselZeroSquared) {
  const double xi2 = kBesselJ0FirstZero * kBesselJ0FirstZero;
  const int n = 101;
  const double scaled = (1.0 - legendre_largest_zero(n)) * 2.0 * n * n;
  EXPECT_LT(std::abs(scaled - xi2) / xi2, 0.02);
}

TEST(BesselJ0FirstZero, MatchesSeriesRootFind) {
  const double root = bessel_j0_root_by_bisection();
  EXPECT_NEAR(bessel_j0_first_zero(), root, 1e-12);
  EXPECT_NEAR(bessel_j0_first_zero(), 2.404825557695773, 1e-15);
  EXPECT_NEAR(bessel_j0_series(bessel_j0_first_zero()), 0.0, 1e-12);
  EXPECT_NEAR(bessel_j0_first_zero(), 2.4, 0.01);
}

}  // namespace
}  // namespace qrecycle
