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

#ifndef QRECYCLE_LEGENDRE_HPP
#define QRECYCLE_LEGENDRE_HPP

#include <vector>

namespace qrecycle {

/// P_0(x) .. P_L(x) at a single abscissa.
struct LegendreTable {
  double x = 0.0;
  std::vector<double> values;

  int max_degree() const { return static_cast<int>(values.size()) - 1; }
  double operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
};

/// Three-term recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
/// Throws std::domain_error if |x| > 1, std::invalid_argument if L < 0.
LegendreTable legendre_all(int max_degree, double x);

struct LegendreValue {
  double p = 1.0;       // P_n(x)
  double p_prev = 0.0;  // P_{n-1}(x), zero for n = 0
};

/// P_n(x) and P_{n-1}(x) by the same recurrence, without the domain check.
LegendreValue legendre_value(int n, double x);

/// dP_n/dx from P_n and P_{n-1}; valid for |x| < 1.
inline double legendre_derivative(int n, double x, const LegendreValue& v) {
  return n * (x * v.p - v.p_prev) / ((x - 1.0) * (x + 1.0));
}

/// Largest root of P_n, n >= 1, to ~1 ulp.
///
/// Newton iteration started at cos(xi0 / (n + 1/2)) inside the bracket
/// [cos(pi / (n + 1/2)), cos(pi / (2n + 1))], which contains the largest root
/// and no other; any Newton step leaving the bracket is replaced by bisection.
/// Throws std::invalid_argument for n < 1 and std::runtime_error if the
/// iteration cap is hit.
double legendre_largest_zero(int n);

/// First positive zero of the Bessel function J_0.
inline constexpr double kBesselJ0FirstZero = 2.404825557695773;

constexpr double bessel_j0_first_zero() { return kBesselJ0FirstZero; }

}  // namespace qrecycle

#endif  // QRECYCLE_LEGENDRE_HPP
