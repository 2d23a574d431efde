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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qrecycle {
namespace {

double gershgorin_radius_max(const SymmetricTridiagonal& a) {
  double scale = 0.0;
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(a.diagonal[i]);
    if (i > 0) r += std::abs(a.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(a.off_diagonal[i]);
    scale = std::max(scale, r);
  }
  return scale;
}

void check_shape(const SymmetricTridiagonal& a) {
  if (a.diagonal.empty() || a.off_diagonal.size() + 1 != a.diagonal.size()) {
    throw std::invalid_argument("SymmetricTridiagonal: inconsistent band lengths");
  }
}

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::vector<double> SymmetricTridiagonal::multiply(std::span<const double> x) const {
  const std::size_t n = dimension();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diagonal[i] * x[i];
    if (i > 0) s += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) s += off_diagonal[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::size_t count_eigenvalues_below(const SymmetricTridiagonal& a, double sigma) {
  check_shape(a);
  const double tiny = std::numeric_limits<double>::min() * 1e3;
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const double e2 = i > 0 ? a.off_diagonal[i - 1] * a.off_diagonal[i - 1] : 0.0;
    q = (a.diagonal[i] - sigma) - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double largest_eigenvalue(const SymmetricTridiagonal& a) {
  check_shape(a);
  const std::size_t n = a.dimension();
  const double radius = gershgorin_radius_max(a);
  double lo = -radius - 1.0;
  double hi = radius + 1.0;
  // Invariant: count(lo) < n <= count(hi), i.e. lambda_max in [lo, hi).
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_eigenvalues_below(a, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> solve_shifted(const SymmetricTridiagonal& a, double shift,
                                  std::span<const double> b) {
  check_shape(a);
  const std::size_t n = a.dimension();
  if (b.size() != n) throw std::invalid_argument("solve_shifted: right-hand side has wrong size");

  std::vector<double> d(n), dl(a.off_diagonal), du(a.off_diagonal);
  std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<bool> swapped(n > 1 ? n - 1 : 0, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = a.diagonal[i] - shift;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] != 0.0) {
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      }
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = true;
    }
  }

  const double tiny = std::max(gershgorin_radius_max(a), 1.0) * std::numeric_limits<double>::epsilon();
  for (double& pivot : d) {
    if (std::abs(pivot) < tiny) pivot = std::copysign(tiny, pivot == 0.0 ? 1.0 : pivot);
  }

  std::vector<double> x(b.begin(), b.end());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped[i]) {
      x[i + 1] -= dl[i] * x[i];
    } else {
      const double temp = x[i];
      x[i] = x[i + 1];
      x[i + 1] = temp - dl[i] * x[i];
    }
  }
  x[n - 1] /= d[n - 1];
  if (n > 1) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (std::size_t k = n; k-- > 2;) {
    const std::size_t i = k - 2;
    x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
  }
  return x;
}

EigenPair principal_eigenpair(const SymmetricTridiagonal& a, double residual_tolerance) {
  check_shape(a);
  const std::size_t n = a.dimension();
  EigenPair pair;
  pair.value = largest_eigenvalue(a);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  constexpr int kMaxIterations = 20;
  for (int it = 0; it < kMaxIterations; ++it) {
    v = solve_shifted(a, pair.value, v);
    const double s = norm2(v);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::runtime_error("principal_eigenpair: inverse iteration broke down");
    }
    const double sign = std::accumulate(v.begin(), v.end(), 0.0) < 0.0 ? -1.0 : 1.0;
    for (double& c : v) c *= sign / s;

    std::vector<double> r = a.multiply(v);
    for (std::size_t i = 0; i < n; ++i) r[i] -= pair.value * v[i];
    if (it >= 1 && norm2(r) <= residual_tolerance) {
      pair.vector = std::move(v);
      return pair;
    }
  }
  throw std::runtime_error("principal_eigenpair: residual above tolerance after iteration cap");
}

}  // namespace qrecycle
