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

#include "qrecycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qrecycle/nspin.hpp"
#include "qrecycle/outcome_density.hpp"
#include "qrecycle/qubit_chain.hpp"
#include "qrecycle/random.hpp"
#include "qrecycle/tridiagonal.hpp"
#include "qrecycle/version.hpp"

namespace qrecycle {
namespace {

struct ModeName {
  SweepMode mode;
  std::string_view name;
};

constexpr ModeName kModeNames[] = {
    {SweepMode::single_qubit, "single_qubit"},
    {SweepMode::single_qubit_sg, "single_qubit_sg"},
    {SweepMode::single_qubit_channel, "single_qubit_channel"},
    {SweepMode::nspin_parallel, "nspin_parallel"},
    {SweepMode::nspin_optimal, "nspin_optimal"},
    {SweepMode::parallel_start, "parallel_start"},
};

void validate_cell(const CellSpec& cell) {
  if (cell.k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(cell.phi >= 0.0 && cell.phi <= std::numbers::pi)) {
    throw std::invalid_argument("phi must lie in [0, pi]");
  }
  if (is_single_qubit(cell.mode)) {
    if (cell.spins != 1) throw std::invalid_argument(std::string(to_string(cell.mode)) + " requires N = 1");
    if (cell.mode == SweepMode::single_qubit_sg && cell.phi != 0.0) {
      throw std::invalid_argument("single_qubit_sg has no Kraus offset; phi must be 0");
    }
    return;
  }
  if (cell.phi != 0.0) throw std::invalid_argument("phi applies to single-qubit modes only");
  if (cell.mode == SweepMode::nspin_parallel) {
    if (cell.spins < 1) throw std::invalid_argument("nspin_parallel requires N >= 1");
  } else if (cell.spins < 2 || cell.spins % 2 != 0) {
    throw std::invalid_argument(std::string(to_string(cell.mode)) + " requires even N >= 2");
  }
}

// Draws one trajectory and returns the overlap the cell averages.
class CellSimulator {
 public:
  explicit CellSimulator(const CellSpec& cell, std::shared_ptr<const NspinChainModel> model)
      : cell_(cell), kraus_(cell.phi), model_(std::move(model)) {}

  double draw(RandomStream& rng) const {
    switch (cell_.mode) {
      case SweepMode::single_qubit:
        return simulate_chain_single(cell_.k, kraus_, MeasurementScheme::covariant, rng).dots.back();
      case SweepMode::single_qubit_sg:
        return simulate_chain_single(cell_.k, kraus_, MeasurementScheme::stern_gerlach, rng).dots.back();
      case SweepMode::single_qubit_channel:
        return simulate_chain_single(cell_.k, kraus_, MeasurementScheme::covariant, rng).posterior_dots.back();
      default:
        return model_->simulate(cell_.k, rng).dots.back();
    }
  }

 private:
  CellSpec cell_;
  QubitKrausFamily kraus_;
  std::shared_ptr<const NspinChainModel> model_;
};

std::shared_ptr<const NspinChainModel> make_model(const CellSpec& cell) {
  switch (cell.mode) {
    case SweepMode::nspin_parallel:
      return std::make_shared<NspinChainModel>(cell.spins, ChainEncoding::parallel);
    case SweepMode::nspin_optimal:
      return std::make_shared<NspinChainModel>(cell.spins, ChainEncoding::optimal);
    case SweepMode::parallel_start:
      return std::make_shared<NspinChainModel>(cell.spins, ChainEncoding::parallel_start);
    default:
      return nullptr;
  }
}

// Running mean and sum of squared deviations; merged with Chan et al.'s rule.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const std::uint64_t total = n + o.n;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / static_cast<double>(total);
    n = total;
  }
};

Moments run_batch(const CellSimulator& sim, const CellSpec& cell, std::uint64_t seed, std::uint64_t batch,
                  std::uint64_t count) {
  RandomStream rng(seed, mix64(cell_stream_key(cell)) + batch);
  Moments m;
  for (std::uint64_t i = 0; i < count; ++i) m.add(sim.draw(rng));
  return m;
}

McEstimate finish(const Moments& m, std::uint64_t seed) {
  McEstimate e;
  e.mean = m.mean;
  e.trials = m.n;
  e.seed = seed;
  if (m.n > 1) {
    const double var = m.m2 / static_cast<double>(m.n - 1);
    e.std_error = std::sqrt(var / static_cast<double>(m.n));
  }
  return e;
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs task(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any task is rethrown here.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task task) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

struct BatchTask {
  std::size_t cell_index;
  std::uint64_t batch;
  std::uint64_t count;
};

std::vector<BatchTask> batch_tasks(std::size_t cell_index, std::uint64_t trials) {
  std::vector<BatchTask> tasks;
  for (std::uint64_t b = 0, done = 0; done < trials; ++b) {
    const std::uint64_t count = std::min(kTrialsPerBatch, trials - done);
    tasks.push_back({cell_index, b, count});
    done += count;
  }
  return tasks;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

nlohmann::ordered_json json_optional(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

double parse_double(std::string_view s) {
  s = trim(s);
  const std::string buf(s);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(value)) {
    throw std::invalid_argument("not a number: '" + buf + "'");
  }
  return value;
}

double parse_angle(std::string_view s) {
  s = trim(s);
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return parse_double(s);
  std::string_view factor = trim(s.substr(0, pos));
  std::string_view rest = trim(s.substr(pos + 2));
  if (!factor.empty() && factor.back() == '*') factor = trim(factor.substr(0, factor.size() - 1));
  double value = std::numbers::pi * (factor.empty() ? 1.0 : parse_double(factor));
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("bad angle: '" + std::string(s) + "'");
    value /= parse_double(rest.substr(1));
  }
  return value;
}

}  // namespace

std::string_view to_string(SweepMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

bool is_single_qubit(SweepMode mode) {
  return mode == SweepMode::single_qubit || mode == SweepMode::single_qubit_sg ||
         mode == SweepMode::single_qubit_channel;
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "jsonl"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or jsonl)");
}

double analytic_delta(const CellSpec& cell) {
  validate_cell(cell);
  switch (cell.mode) {
    case SweepMode::single_qubit:
      return analytic_estimate_delta_single(cell.k, eta_from_c(disturbance_constant(QubitKrausFamily(cell.phi))));
    case SweepMode::single_qubit_sg:
      return analytic_estimate_delta_single(cell.k, 1.0 / 3.0);
    case SweepMode::single_qubit_channel:
      return std::pow(eta_from_c(disturbance_constant(QubitKrausFamily(cell.phi))), cell.k);
    case SweepMode::nspin_parallel:
      return std::pow(parallel_tilde_delta(cell.spins), cell.k);
    case SweepMode::nspin_optimal:
      return std::pow(optimal_tilde_delta(cell.spins), cell.k);
    case SweepMode::parallel_start:
      return delta_k_parallel_start(cell.spins, cell.k);
  }
  throw std::logic_error("analytic_delta: unhandled mode");
}

std::optional<double> McEstimate::z_score(double reference) const {
  if (!std_error || !(*std_error > 0.0)) return std::nullopt;
  return (mean - reference) / *std_error;
}

std::uint64_t cell_stream_key(const CellSpec& cell) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(cell.mode) + 1);
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(cell.spins)));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(cell.k)));
  std::uint64_t phi_bits = 0;
  static_assert(sizeof(phi_bits) == sizeof(cell.phi));
  std::memcpy(&phi_bits, &cell.phi, sizeof(phi_bits));
  return mix64(h ^ phi_bits);
}

McEstimate mc_estimate_delta(const CellSpec& cell, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  validate_cell(cell);
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const CellSimulator sim(cell, make_model(cell));
  const std::vector<BatchTask> tasks = batch_tasks(0, trials);
  std::vector<Moments> partial(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    partial[i] = run_batch(sim, cell, seed, tasks[i].batch, tasks[i].count);
  });
  Moments total;
  for (const Moments& m : partial) total.merge(m);
  return finish(total, seed);
}

std::optional<double> combined_z(const McEstimate& a, const McEstimate& b) {
  if (!a.std_error || !b.std_error) return std::nullopt;
  const double s = std::hypot(*a.std_error, *b.std_error);
  if (!(s > 0.0)) return std::nullopt;
  return (a.mean - b.mean) / s;
}

void SweepConfig::validate() const {
  if (spins.empty()) throw std::invalid_argument("N range is empty");
  if (observers.empty()) throw std::invalid_argument("k range is empty");
  if (phis.empty()) throw std::invalid_argument("phi list is empty");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(z_max > 0.0)) throw std::invalid_argument("z-max must be positive");
  for (const CellSpec& cell : cells()) validate_cell(cell);
}

std::vector<CellSpec> SweepConfig::cells() const {
  auto sorted_unique = [](auto v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto ns = sorted_unique(spins);
  const auto ks = sorted_unique(observers);
  const auto ps = sorted_unique(phis);
  std::vector<CellSpec> out;
  for (int n : ns) {
    for (int k : ks) {
      for (double p : ps) out.push_back({mode, n, k, p});
    }
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<CellSpec> cells = config.cells();

  std::map<int, std::shared_ptr<const NspinChainModel>> models;
  std::vector<CellSimulator> sims;
  sims.reserve(cells.size());
  for (const CellSpec& cell : cells) {
    std::shared_ptr<const NspinChainModel> model;
    if (!is_single_qubit(cell.mode)) {
      auto& slot = models[cell.spins];
      if (!slot) slot = make_model(cell);
      model = slot;
    }
    sims.emplace_back(cell, model);
  }

  std::vector<BatchTask> tasks;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto t = batch_tasks(c, config.trials);
    tasks.insert(tasks.end(), t.begin(), t.end());
  }
  std::vector<Moments> partial(tasks.size());
  parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
    const BatchTask& t = tasks[i];
    partial[i] = run_batch(sims[t.cell_index], cells[t.cell_index], config.seed, t.batch, t.count);
  });

  std::vector<Moments> totals(cells.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) totals[tasks[i].cell_index].merge(partial[i]);

  SweepResult result;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SweepRecord rec;
    rec.cell = cells[c];
    rec.analytic = analytic_delta(cells[c]);
    rec.estimate = finish(totals[c], config.seed);
    rec.z = rec.estimate.z_score(rec.analytic);
    if (rec.z) {
      result.max_abs_z = std::max(result.max_abs_z, std::abs(*rec.z));
      if (std::abs(*rec.z) > config.z_max) result.within_threshold = false;
    }
    result.records.push_back(rec);
  }
  return result;
}

SweepResult run_sweep(const SweepConfig& config, std::ostream& out) {
  SweepResult result = run_sweep(config);
  write_sweep_records(out, result.records, config.format);
  return result;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_records(std::ostream& out, std::span<const SweepRecord> records, OutputFormat format) {
  const std::string build = std::string(build_id());
  if (format == OutputFormat::csv) {
    out << "mode,N,k,phi,analytic,mc_mean,mc_stderr,z,trials,seed,build_id\r\n";
    for (const SweepRecord& r : records) {
      out << to_string(r.cell.mode) << ',' << r.cell.spins << ',' << r.cell.k << ',' << format_real(r.cell.phi)
          << ',' << format_real(r.analytic) << ',' << format_real(r.estimate.mean) << ','
          << optional_real(r.estimate.std_error) << ',' << optional_real(r.z) << ',' << r.estimate.trials << ','
          << r.estimate.seed << ',' << csv_field(build) << "\r\n";
    }
    return;
  }
  for (const SweepRecord& r : records) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(r.cell.mode);
    j["N"] = r.cell.spins;
    j["k"] = r.cell.k;
    j["phi"] = r.cell.phi;
    j["analytic"] = r.analytic;
    j["mc_mean"] = r.estimate.mean;
    j["mc_stderr"] = json_optional(r.estimate.std_error);
    j["z"] = json_optional(r.z);
    j["trials"] = r.estimate.trials;
    j["seed"] = r.estimate.seed;
    j["build_id"] = build;
    out << j.dump() << '\n';
  }
}

EncodingRecord emit_encoding(int spins) {
  const JacobiMatrix m = jacobi_matrix(spins);
  EigenPair pair = principal_eigenpair(m);
  EncodingRecord rec;
  rec.spins = spins;
  rec.lambda_max = pair.value;
  rec.phi = std::move(pair.vector);
  rec.parallel_tilde_delta = parallel_tilde_delta(spins);
  rec.optimal_tilde_delta = optimal_tilde_delta(spins);
  return rec;
}

void write_encoding(std::ostream& out, const EncodingRecord& record, OutputFormat format) {
  const std::string build = std::string(build_id());
  if (format == OutputFormat::csv) {
    out << "N,J,phi_J,lambda_max,parallel_tilde_delta,optimal_tilde_delta,build_id\r\n";
    for (std::size_t j = 0; j < record.phi.size(); ++j) {
      out << record.spins << ',' << j << ',' << format_real(record.phi[j]) << ',' << format_real(record.lambda_max)
          << ',' << format_real(record.parallel_tilde_delta) << ',' << format_real(record.optimal_tilde_delta)
          << ',' << csv_field(build) << "\r\n";
    }
    return;
  }
  nlohmann::ordered_json j;
  j["N"] = record.spins;
  j["lambda_max"] = record.lambda_max;
  j["phi"] = record.phi;
  j["parallel_tilde_delta"] = record.parallel_tilde_delta;
  j["optimal_tilde_delta"] = record.optimal_tilde_delta;
  j["build_id"] = build;
  out << j.dump() << '\n';
}

AnalyticRecord analytic_record(const CellSpec& cell) {
  AnalyticRecord rec;
  rec.cell = cell;
  rec.delta = analytic_delta(cell);
  rec.fidelity = fidelity_from_delta(rec.delta);
  return rec;
}

void write_analytic_records(std::ostream& out, std::span<const AnalyticRecord> records, OutputFormat format) {
  const std::string build = std::string(build_id());
  if (format == OutputFormat::csv) {
    out << "mode,N,k,phi,delta,fidelity,build_id\r\n";
    for (const AnalyticRecord& r : records) {
      out << to_string(r.cell.mode) << ',' << r.cell.spins << ',' << r.cell.k << ',' << format_real(r.cell.phi)
          << ',' << format_real(r.delta) << ',' << format_real(r.fidelity) << ',' << csv_field(build) << "\r\n";
    }
    return;
  }
  for (const AnalyticRecord& r : records) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(r.cell.mode);
    j["N"] = r.cell.spins;
    j["k"] = r.cell.k;
    j["phi"] = r.cell.phi;
    j["delta"] = r.delta;
    j["fidelity"] = r.fidelity;
    j["build_id"] = build;
    out << j.dump() << '\n';
  }
}

void write_plot_script(std::ostream& out, std::string_view csv_path, SweepMode mode) {
  out << "# gnuplot script generated by qrecycle\n"
      << "set datafile separator ','\n"
      << "set key top right\n"
      << "set logscale y\n"
      << "set xlabel 'observer k'\n"
      << "set ylabel 'Delta_k'\n"
      << "set title '" << to_string(mode) << "'\n"
      << "plot '" << csv_path << "' using 3:5 every ::1 with linespoints title 'analytic', \\\n"
      << "     '" << csv_path << "' using 3:6:7 every ::1 with yerrorbars title 'Monte Carlo'\n";
}

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::vector<int> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<int> parts;
    std::size_t start = 0;
    for (;;) {
      const auto pos = text.find(':', start);
      parts.push_back(parse_int(text.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range must be a:b or a:b:step");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0 || parts[1] < parts[0]) throw std::invalid_argument("range must be ascending with step > 0");
    for (int v = parts[0]; v <= parts[1]; v += step) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    out.push_back(parse_int(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_angle_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty angle list");
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    out.push_back(parse_angle(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace qrecycle
