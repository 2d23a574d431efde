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
#include <numbers>
#include <stdexcept>
#include <string>

namespace qrecycle {

LegendreTable legendre_all(int max_degree, double x) {
  if (max_degree < 0) {
    throw std::invalid_argument("legendre_all: degree must be non-negative");
  }
  if (!(std::abs(x) <= 1.0)) {
    throw std::domain_error("legendre_all: |x| must not exceed 1");
  }
  LegendreTable table{x, std::vector<double>(static_cast<std::size_t>(max_degree) + 1)};
  table.values[0] = 1.0;
  if (max_degree >= 1) table.values[1] = x;
  for (int n = 1; n < max_degree; ++n) {
    table.values[n + 1] = ((2 * n + 1) * x * table.values[n] - n * table.values[n - 1]) / (n + 1);
  }
  return table;
}

LegendreValue legendre_value(int n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (int j = 0; j < n; ++j) {
    const double next = ((2 * j + 1) * x * cur - j * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double legendre_largest_zero(int n) {
  if (n < 1) {
    throw std::invalid_argument("legendre_largest_zero: degree must be >= 1");
  }
  if (n == 1) return 0.0;

  const double pi = std::numbers::pi;
  double lo = std::cos(pi / (n + 0.5));   // P_n(lo) < 0
  double hi = std::cos(pi / (2.0 * n + 1.0));  // P_n(hi) > 0
  double x = std::cos(kBesselJ0FirstZero / (n + 0.5));
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

  constexpr int kMaxIterations = 100;
  for (int it = 0; it < kMaxIterations; ++it) {
    const LegendreValue v = legendre_value(n, x);
    if (v.p == 0.0) return x;
    if (v.p < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double dp = legendre_derivative(n, x, v);
    double next = x - v.p / dp;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 2e-16 * std::abs(x) || hi - lo <= 4e-16) return x;
  }
  throw std::runtime_error("legendre_largest_zero: no convergence for n = " + std::to_string(n));
}

}  // namespace qrecycle
