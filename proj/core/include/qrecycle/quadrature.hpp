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

#ifndef QRECYCLE_QUADRATURE_HPP
#define QRECYCLE_QUADRATURE_HPP

#include <vector>

namespace qrecycle {

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending. Exact for
/// polynomials of degree <= 2n - 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Integral of f over [a, b] by the affine image of the rule.
  template <typename F>
  double integrate(F&& f, double a = -1.0, double b = 1.0) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

/// Roots of P_n by Newton's method from the Tricomi-style guess
/// cos(pi (i + 3/4) / (n + 1/2)); weights 2 / ((1 - x^2) P_n'(x)^2).
/// Throws std::invalid_argument for n < 1.
GaussLegendreRule gauss_legendre(int n);

}  // namespace qrecycle

#endif  // QRECYCLE_QUADRATURE_HPP
