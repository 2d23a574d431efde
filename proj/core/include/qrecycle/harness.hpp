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

#ifndef QRECYCLE_HARNESS_HPP
#define QRECYCLE_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrecycle {

/// What a Monte Carlo cell simulates. Each mode estimates the average of
/// n . m_k (the k-th observer's estimate) except `single_qubit_channel`,
/// which averages n . r_k for the state r_k handed on by observer k.
enum class SweepMode {
  single_qubit,          // covariant POVM, Kraus family with offset phi
  single_qubit_sg,       // Stern-Gerlach along random axes
  single_qubit_channel,  // covariant POVM, overlap of the handed-on state
  nspin_parallel,
  nspin_optimal,
  parallel_start,
};

std::string_view to_string(SweepMode mode);
/// Throws std::invalid_argument for an unknown name.
SweepMode parse_sweep_mode(std::string_view name);
bool is_single_qubit(SweepMode mode);

enum class OutputFormat { csv, jsonl };
std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

struct CellSpec {
  SweepMode mode = SweepMode::single_qubit;
  int spins = 1;
  int k = 1;
  double phi = 0.0;
};

/// Closed-form value of the quantity the cell estimates.
double analytic_delta(const CellSpec& cell);

struct McEstimate {
  double mean = 0.0;
  std::optional<double> std_error;  // sample sd / sqrt(trials); empty for a single trial
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  /// (mean - reference) / std_error, empty when the error is unavailable or zero.
  std::optional<double> z_score(double reference) const;
};

/// Trials per RandomStream. Batch b of a cell draws from stream
/// mix64(key(cell)) + b, so results depend only on (cell, trials, seed).
inline constexpr std::uint64_t kTrialsPerBatch = 4096;

/// Stream key derived from the cell contents.
std::uint64_t cell_stream_key(const CellSpec& cell);

/// Monte Carlo estimate of the cell's Delta_k. `workers` = 0 picks the
/// hardware concurrency; the result does not depend on it.
/// Throws std::invalid_argument for an invalid cell or trials == 0.
McEstimate mc_estimate_delta(const CellSpec& cell, std::uint64_t trials, std::uint64_t seed,
                             unsigned workers = 1);

/// Combined z for two independent estimates of the same quantity.
std::optional<double> combined_z(const McEstimate& a, const McEstimate& b);

struct SweepConfig {
  SweepMode mode = SweepMode::single_qubit;
  std::vector<int> spins{1};
  std::vector<int> observers{1, 2, 3, 4};
  std::vector<double> phis{0.0};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::csv;
  double z_max = 4.0;
  unsigned workers = 0;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;

  /// Cells in emission order: ascending N, then k, then phi.
  std::vector<CellSpec> cells() const;
};

struct SweepRecord {
  CellSpec cell;
  double analytic = 0.0;
  McEstimate estimate;
  std::optional<double> z;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  double max_abs_z = 0.0;
  bool within_threshold = true;
};

/// Validates the config, then runs every (cell, batch) task on a worker pool.
/// Records come back in cells() order.
SweepResult run_sweep(const SweepConfig& config);

/// Runs and writes the records (with header for CSV).
SweepResult run_sweep(const SweepConfig& config, std::ostream& out);

/// CSV columns: mode,N,k,phi,analytic,mc_mean,mc_stderr,z,trials,seed,build_id.
/// Floats use 17 significant digits; a missing stderr or z is an empty field
/// (null in JSON lines).
void write_sweep_records(std::ostream& out, std::span<const SweepRecord> records, OutputFormat format);

struct EncodingRecord {
  int spins = 0;
  double lambda_max = 0.0;
  std::vector<double> phi;
  double parallel_tilde_delta = 0.0;
  double optimal_tilde_delta = 0.0;
};

/// Optimal encoding of N spins together with both per-step shrink factors.
EncodingRecord emit_encoding(int spins);

/// CSV: one row per J with columns N,J,phi_J,lambda_max,parallel_tilde_delta,
/// optimal_tilde_delta,build_id. JSON lines: one object with a "phi" array.
void write_encoding(std::ostream& out, const EncodingRecord& record, OutputFormat format);

struct AnalyticRecord {
  CellSpec cell;
  double delta = 0.0;
  double fidelity = 0.0;
};

AnalyticRecord analytic_record(const CellSpec& cell);

/// CSV columns: mode,N,k,phi,delta,fidelity,build_id.
void write_analytic_records(std::ostream& out, std::span<const AnalyticRecord> records, OutputFormat format);

/// Gnuplot script plotting analytic and Monte Carlo Delta_k from a sweep CSV.
void write_plot_script(std::ostream& out, std::string_view csv_path, SweepMode mode);

/// "1:4", "1:9:2", "2,4,10" or a single integer. Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

/// Comma-separated reals; each item is a plain number or a multiple of pi
/// such as "pi", "pi/4", "3pi/4", "0.5pi". Throws std::invalid_argument.
std::vector<double> parse_angle_list(std::string_view text);

/// "%.17g".
std::string format_real(double value);

}  // namespace qrecycle

#endif  // QRECYCLE_HARNESS_HPP
