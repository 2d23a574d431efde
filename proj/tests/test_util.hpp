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

#ifndef QRECYCLE_TESTS_TEST_UTIL_HPP
#define QRECYCLE_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace qrecycle::testing {

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;
};

template <typename Draw>
SampleStats sample_stats(int trials, Draw draw) {
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double v = draw();
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / trials;
  const double var = (sum2 - trials * mean * mean) / (trials - 1);
  return {mean, std::sqrt(var / trials)};
}

/// |mean - expected| / stderr.
inline double abs_z(const SampleStats& s, double expected) { return std::abs(s.mean - expected) / s.std_error; }

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

/// Asymptotic 1% critical value of the KS statistic.
inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

}  // namespace qrecycle::testing

#endif  // QRECYCLE_TESTS_TEST_UTIL_HPP
