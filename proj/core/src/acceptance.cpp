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

#include "qrecycle/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qrecycle/harness.hpp"
#include "qrecycle/legendre.hpp"
#include "qrecycle/nspin.hpp"
#include "qrecycle/outcome_density.hpp"
#include "qrecycle/qubit_chain.hpp"

namespace qrecycle::acceptance {
namespace {

constexpr std::uint64_t kSeed = 42;

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double z_or_inf(const std::optional<double>& z) { return z ? *z : INFINITY; }

CriterionResult single_qubit_law(unsigned workers) {
  Stopwatch clock;
  CriterionResult r{1, "single-qubit law Delta_k = 3^-k", true, "", 0.0};
  int within3 = 0;
  bool all_within4 = true;
  for (int k = 1; k <= 4; ++k) {
    const CellSpec cell{SweepMode::single_qubit, 1, k, 0.0};
    const McEstimate e = mc_estimate_delta(cell, 1'000'000, kSeed, workers);
    const double expected = std::pow(3.0, -k);
    const double z = z_or_inf(e.z_score(expected));
    if (std::abs(z) <= 3.0) ++within3;
    if (!(std::abs(z) <= 4.0)) all_within4 = false;
    r.detail += fmt("k=%d mc=%.6f exp=%.6f z=%+.2f; ", k, e.mean, expected, z);
  }
  r.seconds = clock.seconds();
  r.passed = within3 >= 3 && all_within4 && r.seconds < 10.0;
  r.detail += fmt("|z|<=3 in %d/4, runtime %.2fs (limit 10s)", within3, r.seconds);
  return r;
}

CriterionResult kraus_family_channel(unsigned workers) {
  Stopwatch clock;
  CriterionResult r{2, "Kraus-family channel Delta_2 = (cos(phi)/3)^2", true, "", 0.0};
  const double pi = std::numbers::pi;
  for (double phi : {0.0, pi / 4, pi / 2, 3 * pi / 4, pi}) {
    const QubitKrausFamily kraus(phi);
    const double c = disturbance_constant(kraus);
    const double eta = eta_from_c(c);
    const double expected = std::pow(std::cos(phi) / 3.0, 2);
    const bool closed_form_ok = std::abs(c - (1.0 + std::cos(phi))) < 1e-15 &&
                                std::abs(eta * eta - expected) < 1e-15;
    const McEstimate e = mc_estimate_delta({SweepMode::single_qubit_channel, 1, 2, phi}, 100'000, kSeed, workers);
    const double z = z_or_inf(e.z_score(expected));
    r.passed = r.passed && closed_form_ok && std::abs(z) <= 3.0;
    r.detail += fmt("phi=%.4f c=%.3f eta=%+.4f mc=%+.5f exp=%+.5f z=%+.2f; ", phi, c, eta, e.mean, expected, z);
  }
  r.seconds = clock.seconds();
  return r;
}

CriterionResult scheme_equivalence(unsigned workers) {
  Stopwatch clock;
  CriterionResult r{3, "Stern-Gerlach vs covariant POVM", true, "", 0.0};
  for (int k = 1; k <= 3; ++k) {
    const McEstimate cov = mc_estimate_delta({SweepMode::single_qubit, 1, k, 0.0}, 100'000, kSeed, workers);
    const McEstimate sg = mc_estimate_delta({SweepMode::single_qubit_sg, 1, k, 0.0}, 100'000, kSeed, workers);
    const double z = z_or_inf(combined_z(cov, sg));
    r.passed = r.passed && std::abs(z) <= 3.0;
    r.detail += fmt("k=%d cov=%.5f sg=%.5f z=%+.2f; ", k, cov.mean, sg.mean, z);
  }
  r.seconds = clock.seconds();
  return r;
}

CriterionResult parallel_encoding(unsigned workers) {
  Stopwatch clock;
  CriterionResult r{4, "parallel encoding Delta_k = (N/(N+2))^k", true, "", 0.0};
  for (int n : {2, 4, 10}) {
    for (int k : {1, 2}) {
      const McEstimate e = mc_estimate_delta({SweepMode::nspin_parallel, n, k, 0.0}, 100'000, kSeed, workers);
      const double expected = std::pow(static_cast<double>(n) / (n + 2), k);
      const double z = z_or_inf(e.z_score(expected));
      r.passed = r.passed && std::abs(z) <= 3.0;
      r.detail += fmt("N=%d k=%d mc=%.5f exp=%.5f z=%+.2f; ", n, k, e.mean, expected, z);
    }
  }
  r.seconds = clock.seconds();
  return r;
}

CriterionResult optimal_triangle(unsigned) {
  Stopwatch clock;
  CriterionResult r{5, "eigenvalue / Legendre zero / quadrature triangle, even N <= 200", true, "", 0.0};
  double worst_root = 0.0;
  double worst_quad = 0.0;
  for (int n = 2; n <= 200; n += 2) {
    const JacobiMatrix m = jacobi_matrix(n);
    const EigenPair pair = principal_eigenpair(m);
    const double zero = legendre_largest_zero(n / 2 + 1);
    const OutcomeDensity g(EncodingSpec::make(n, pair.vector), OutcomeDensity::Sampling::disabled);
    const double form = quadratic_form(m, pair.vector);
    worst_root = std::max(worst_root, std::abs(pair.value - zero));
    worst_quad = std::max(worst_quad, std::abs(form - g.mean()));
  }
  r.seconds = clock.seconds();
  r.passed = worst_root < 1e-11 && worst_quad < 1e-10 && r.seconds < 5.0;
  r.detail = fmt("max|lambda - x| = %.2e (limit 1e-11), max|PhiMPhi - int x g| = %.2e (limit 1e-10), runtime %.3fs",
                 worst_root, worst_quad, r.seconds);
  return r;
}

CriterionResult mixed_start(unsigned workers) {
  Stopwatch clock;
  CriterionResult r{6, "parallel start + optimal second observer, N = 4", true, "", 0.0};
  const double expected = (4.0 / 6.0) * std::sqrt(3.0 / 5.0);
  const double closed_form = delta_k_parallel_start(4, 2);
  const bool four_sf = std::abs(closed_form - 0.5164) < 0.00005;
  const McEstimate e = mc_estimate_delta({SweepMode::parallel_start, 4, 2, 0.0}, 1'000'000, kSeed, workers);
  const double z = z_or_inf(e.z_score(expected));
  r.passed = four_sf && std::abs(closed_form - expected) < 1e-15 && std::abs(z) <= 3.0;
  r.seconds = clock.seconds();
  r.detail = fmt("closed form %.6f (0.5164 at 4 s.f.: %s), mc=%.6f +- %.6f, z=%+.2f", closed_form,
                 four_sf ? "yes" : "no", e.mean, e.std_error.value_or(NAN), z);
  return r;
}

CriterionResult asymptotics(unsigned) {
  Stopwatch clock;
  CriterionResult r{7, "(1 - x_n) 2 n^2 -> xi0^2", true, "", 0.0};
  const double xi2 = bessel_j0_first_zero() * bessel_j0_first_zero();
  double previous_gap = INFINITY;
  bool monotone = true;
  double gap_200 = 0.0;
  for (int n_spins : {20, 50, 100, 200}) {
    const int n = n_spins / 2 + 1;
    const double scaled = (1.0 - legendre_largest_zero(n)) * 2.0 * n * n;
    const double gap = std::abs(scaled - xi2) / xi2;
    monotone = monotone && gap < previous_gap;
    previous_gap = gap;
    if (n_spins == 200) gap_200 = gap;
    r.detail += fmt("N=%d: %.5f (rel. gap %.3f%%); ", n_spins, scaled, 100 * gap);
  }
  r.passed = monotone && gap_200 <= 0.02;
  r.detail += fmt("xi0^2 = %.4f, monotone: %s", xi2, monotone ? "yes" : "no");
  r.seconds = clock.seconds();
  return r;
}

CriterionResult classical_transition(unsigned) {
  Stopwatch clock;
  CriterionResult r{8, "classical-transition scaling at F_k = 0.9", true, "", 0.0};
  const int par64 = classical_threshold(64, 0.9, EncodingKind::parallel);
  const int par256 = classical_threshold(256, 0.9, EncodingKind::parallel);
  const int opt64 = classical_threshold(64, 0.9, EncodingKind::optimal);
  const int opt256 = classical_threshold(256, 0.9, EncodingKind::optimal);
  const double par_ratio = static_cast<double>(par256) / par64;
  const double opt_ratio = static_cast<double>(opt256) / opt64;
  r.seconds = clock.seconds();
  r.passed = par_ratio >= 3.5 && par_ratio <= 4.5 && opt_ratio >= 1.7 && opt_ratio <= 2.3 && r.seconds < 1.0;
  r.detail = fmt("parallel %d -> %d (ratio %.3f, want [3.5, 4.5]); optimal %d -> %d (ratio %.3f, want [1.7, 2.3]); "
                 "runtime %.3fs",
                 par64, par256, par_ratio, opt64, opt256, opt_ratio, r.seconds);
  return r;
}

CriterionResult determinism(unsigned) {
  Stopwatch clock;
  CriterionResult r{9, "byte-identical sweeps across runs and worker counts", true, "", 0.0};
  auto render = [](SweepConfig cfg, unsigned workers) {
    cfg.workers = workers;
    std::ostringstream out;
    run_sweep(cfg, out);
    return out.str();
  };
  SweepConfig qubit;
  qubit.mode = SweepMode::single_qubit;
  qubit.observers = {1, 2, 3, 4};
  qubit.phis = {0.0, std::numbers::pi / 3};
  qubit.trials = 50'000;
  SweepConfig nspin;
  nspin.mode = SweepMode::nspin_optimal;
  nspin.spins = {2, 4, 10};
  nspin.observers = {1, 2, 3};
  nspin.trials = 30'000;
  nspin.format = OutputFormat::jsonl;

  for (const SweepConfig& cfg : {qubit, nspin}) {
    const std::string a = render(cfg, 1);
    const std::string b = render(cfg, 1);
    const std::string c = render(cfg, 4);
    const std::string d = render(cfg, 7);
    const bool same = !a.empty() && a == b && a == c && a == d;
    r.passed = r.passed && same;
    r.detail += fmt("%s/%s: %zu bytes, identical=%s; ", std::string(to_string(cfg.mode)).c_str(),
                    std::string(to_string(cfg.format)).c_str(), a.size(), same ? "yes" : "no");
  }
  r.seconds = clock.seconds();
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "single-qubit law", single_qubit_law},
      {2, "Kraus-family channel", kraus_family_channel},
      {3, "scheme equivalence", scheme_equivalence},
      {4, "parallel encoding", parallel_encoding},
      {5, "optimal-encoding triangle", optimal_triangle},
      {6, "mixed-start chain", mixed_start},
      {7, "asymptotics", asymptotics},
      {8, "classical-transition scaling", classical_transition},
      {9, "determinism", determinism},
  };
  return all;
}

bool run_all(std::ostream& out, unsigned workers) {
  bool ok = true;
  for (const Criterion& c : criteria()) {
    CriterionResult r;
    try {
      r = c.run(workers);
    } catch (const std::exception& e) {
      r = {c.id, c.title, false, std::string("exception: ") + e.what(), 0.0};
    }
    ok = ok && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << " AC" << r.id << " " << r.title << " [" << fmt("%.2fs", r.seconds)
        << "] " << r.detail << '\n';
  }
  out << (ok ? "ALL ACCEPTANCE CRITERIA PASSED" : "SOME ACCEPTANCE CRITERIA FAILED") << '\n';
  return ok;
}

}  // namespace qrecycle::acceptance
