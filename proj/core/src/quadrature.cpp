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

#include "qrecycle/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrecycle/legendre.hpp"

namespace qrecycle {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    LegendreValue v;
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      v = legendre_value(n, x);
      dp = legendre_derivative(n, x, v);
      const double dx = v.p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    v = legendre_value(n, x);
    dp = legendre_derivative(n, x, v);
    const double w = 2.0 / ((1.0 - x) * (1.0 + x) * dp * dp);
    // Roots come out in descending order; mirror into ascending slots.
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace qrecycle
