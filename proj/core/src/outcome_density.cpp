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

#include "qrecycle/outcome_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrecycle/legendre.hpp"
#include "qrecycle/sphere.hpp"

namespace qrecycle {
namespace {

constexpr std::size_t kInitialCells = 4096;
constexpr std::size_t kMaxCells = std::size_t{1} << 22;
constexpr double kTableKsTolerance = 1e-4;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

OutcomeDensity::OutcomeDensity(EncodingSpec encoding, Sampling sampling)
    : encoding_(std::move(encoding)),
      rule_(gauss_legendre(encoding_.spins + 2)),
      cell_rule_(gauss_legendre(encoding_.spins / 2 + 1)) {
  coefficients_.resize(encoding_.phi.size());
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    coefficients_[j] = std::sqrt(2.0 * j + 1.0) * encoding_.phi[j];
  }
  if (sampling == Sampling::enabled) build_table();
}

double OutcomeDensity::operator()(double x) const {
  // Amplitude sum_J c_J P_J(x) with the Legendre recurrence inlined.
  double prev = 0.0;
  double cur = 1.0;
  double amp = coefficients_[0];
  for (std::size_t j = 1; j < coefficients_.size(); ++j) {
    const double n = static_cast<double>(j - 1);
    const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
    amp += coefficients_[j] * cur;
  }
  return 0.5 * amp * amp;
}

double OutcomeDensity::cdf(double x) const {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) x = 1.0;
  return cell_rule_.integrate(*this, -1.0, x);
}

double OutcomeDensity::normalization() const { return rule_.integrate(*this); }

double OutcomeDensity::mean() const {
  return rule_.integrate([this](double x) { return x * (*this)(x); });
}

void OutcomeDensity::build_table() {
  const double pi = std::numbers::pi;
  for (std::size_t cells = kInitialCells; cells <= kMaxCells; cells *= 2) {
    table_theta_.assign(cells + 1, 0.0);
    table_cdf_.assign(cells + 1, 0.0);
    for (std::size_t i = 0; i <= cells; ++i) {
      table_theta_[i] = pi * static_cast<double>(cells - i) / static_cast<double>(cells);
    }
    auto x_at = [&](std::size_t i) { return i == 0 ? -1.0 : (i == cells ? 1.0 : std::cos(table_theta_[i])); };

    double acc = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      acc += cell_rule_.integrate(*this, x_at(i), x_at(i + 1));
      table_cdf_[i + 1] = acc;
    }
    const double total = acc;
    for (double& c : table_cdf_) c /= total;
    table_cdf_.back() = 1.0;

    double ks = std::abs(total - 1.0);
    for (std::size_t i = 0; i < cells; ++i) {
      const double theta_mid = 0.5 * (table_theta_[i] + table_theta_[i + 1]);
      const double x_mid = std::cos(theta_mid);
      const double exact = table_cdf_[i] + cell_rule_.integrate(*this, x_at(i), x_mid) / total;
      const double tabulated = 0.5 * (table_cdf_[i] + table_cdf_[i + 1]);
      ks = std::max(ks, std::abs(exact - tabulated));
    }
    table_ks_ = ks;
    if (ks < kTableKsTolerance) return;
  }
  throw std::runtime_error("OutcomeDensity: inverse-CDF table did not reach the KS tolerance");
}

double OutcomeDensity::sample(RandomStream& rng) const {
  if (table_cdf_.empty()) throw std::logic_error("OutcomeDensity: sampling table was not built");
  const double u = rng.uniform();
  // First cell edge with cdf > u; u < 1 = cdf.back() so the index is valid.
  const auto it = std::upper_bound(table_cdf_.begin(), table_cdf_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - table_cdf_.begin()) - 1;
  const double t = (u - table_cdf_[i]) / (table_cdf_[i + 1] - table_cdf_[i]);
  const double theta = table_theta_[i] + t * (table_theta_[i + 1] - table_theta_[i]);
  return std::clamp(std::cos(theta), -1.0, 1.0);
}

NspinChainModel::NspinChainModel(int spins, ChainEncoding encoding) : spins_(spins), encoding_(encoding) {
  if (encoding == ChainEncoding::parallel) {
    if (spins < 1) throw std::invalid_argument("parallel chain needs N >= 1");
  } else {
    density_.emplace(optimal_encoding(spins));
    optimal_shrink_ = optimal_tilde_delta(spins);
  }
}

double NspinChainModel::analytic_delta(int k) const {
  if (k < 1) throw std::invalid_argument("observer count k must be >= 1");
  switch (encoding_) {
    case ChainEncoding::parallel:
      return std::pow(parallel_tilde_delta(spins_), k);
    case ChainEncoding::optimal:
      return std::pow(optimal_shrink_, k);
    case ChainEncoding::parallel_start:
      return parallel_tilde_delta(spins_) * std::pow(optimal_shrink_, k - 1);
  }
  return 0.0;
}

double NspinChainModel::first_tilt(RandomStream& rng) const {
  if (encoding_ == ChainEncoding::optimal) return density_->sample(rng);
  return sample_cos_tilt(rng, spins_);
}

double NspinChainModel::later_tilt(RandomStream& rng) const {
  if (encoding_ == ChainEncoding::parallel) return sample_cos_tilt(rng, spins_);
  return density_->sample(rng);
}

ChainRecord NspinChainModel::simulate(int k, RandomStream& rng) const {
  if (k < 1) throw std::invalid_argument("observer count k must be >= 1");
  ChainRecord record;
  record.true_direction = sample_uniform_sphere(rng);
  record.estimates.reserve(static_cast<std::size_t>(k));
  record.dots.reserve(static_cast<std::size_t>(k));

  UnitVector previous = record.true_direction;
  for (int j = 0; j < k; ++j) {
    const double x = j == 0 ? first_tilt(rng) : later_tilt(rng);
    const UnitVector estimate = rotate_towards(previous, x, kTwoPi * rng.uniform());
    record.estimates.push_back(estimate);
    record.dots.push_back(std::clamp(dot(record.true_direction, estimate), -1.0, 1.0));
    previous = estimate;
  }
  // Prepared states U(m)|Phi> or |m>^N are centred on the estimate.
  record.posterior_dots = record.dots;
  return record;
}

ChainRecord simulate_chain_nspin(int spins, int k, ChainEncoding encoding, RandomStream& rng) {
  return NspinChainModel(spins, encoding).simulate(k, rng);
}

}  // namespace qrecycle
