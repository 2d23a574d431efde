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

// qrecycle: closed forms and Monte Carlo estimates for sequential,
// non-communicating observers of the same spin ensemble.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrecycle/acceptance.hpp"
#include "qrecycle/harness.hpp"

namespace {

using namespace qrecycle;

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CommonOptions {
  std::string mode = "single_qubit";
  std::string spins = "1";
  std::string observers = "1:4";
  std::string phis = "0";
  std::string format = "csv";
  std::string out;
};

void add_cell_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--mode", o.mode,
                  "single_qubit | single_qubit_sg | single_qubit_channel | nspin_parallel | nspin_optimal | "
                  "parallel_start")
      ->capture_default_str();
  cmd->add_option("--n", o.spins, "number of spins: N, a:b[:step] or a,b,c")->capture_default_str();
  cmd->add_option("--k", o.observers, "observer index: k, a:b[:step] or a,b,c")->capture_default_str();
  cmd->add_option("--phi", o.phis, "Kraus offset angle(s) in [0, pi]; accepts pi/4, 3pi/4, ...")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "csv | jsonl")->capture_default_str();
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

void add_mc_options(CLI::App* cmd, SweepConfig& cfg) {
  cmd->add_option("--trials", cfg.trials, "Monte Carlo trajectories per cell")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--z-max", cfg.z_max, "exit with status 1 if any |z| exceeds this")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "worker threads, 0 = hardware concurrency (output is identical)")
      ->capture_default_str();
}

// Command-line flags win over file entries.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() || item.name == "config") {
      throw std::invalid_argument("config file '" + path + "': unsupported key '" + item.fullname() + "'");
    }
    CLI::Option* opt = cmd->get_option_no_throw("--" + item.name);
    if (opt == nullptr) {
      throw std::invalid_argument("config file '" + path + "': unknown key '" + item.name + "'");
    }
    if (opt->count() > 0) continue;
    std::string value;
    for (const std::string& part : item.inputs) value += (value.empty() ? "" : ",") + part;
    opt->add_result(value);
    opt->run_callback();
  }
}

SweepConfig to_config(const CommonOptions& o, SweepConfig cfg) {
  cfg.mode = parse_sweep_mode(o.mode);
  cfg.spins = parse_int_list(o.spins);
  cfg.observers = parse_int_list(o.observers);
  cfg.phis = parse_angle_list(o.phis);
  cfg.format = parse_output_format(o.format);
  cfg.validate();
  return cfg;
}

void warn_degenerate(const SweepResult& result) {
  for (const SweepRecord& r : result.records) {
    if (!r.estimate.std_error) {
      std::cerr << "warning: " << to_string(r.cell.mode) << " N=" << r.cell.spins << " k=" << r.cell.k
                << ": standard error undefined for " << r.estimate.trials << " trial(s); stderr and z left empty\n";
    }
  }
}

int report_threshold(const SweepResult& result, double z_max) {
  if (result.within_threshold) return kExitOk;
  std::cerr << "error: max |z| = " << result.max_abs_z << " exceeds --z-max " << z_max << '\n';
  return kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrecycle: information left for successive observers of the same spin ensemble"};
  app.require_subcommand(1);

  CommonOptions analytic_opts;
  auto* analytic = app.add_subcommand("analytic", "print closed-form Delta_k and F_k");
  add_cell_options(analytic, analytic_opts);

  CommonOptions mc_opts;
  SweepConfig mc_cfg;
  mc_opts.observers = "1";
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a single (mode, N, k, phi) cell");
  add_cell_options(mc, mc_opts);
  add_mc_options(mc, mc_cfg);

  CommonOptions sweep_opts;
  SweepConfig sweep_cfg;
  std::string plot_script;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo vs closed form over N, k and phi ranges");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config, "key=value file with any of the long options (without dashes)");
  add_cell_options(sweep, sweep_opts);
  add_mc_options(sweep, sweep_cfg);
  sweep->add_option("--plot-script", plot_script, "also write a gnuplot script reading the --out CSV");

  int encode_n = 2;
  std::string encode_format = "csv";
  std::string encode_out;
  auto* encode = app.add_subcommand("encode", "optimal encoding coefficients Phi_J for N spins");
  encode->add_option("--n", encode_n, "even number of spins")->capture_default_str();
  encode->add_option("--format", encode_format, "csv | jsonl")->capture_default_str();
  encode->add_option("--out", encode_out, "output path (default stdout)");

  unsigned selftest_workers = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--workers", selftest_workers, "worker threads, 0 = hardware concurrency");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analytic) {
      const SweepConfig cfg = to_config(analytic_opts, SweepConfig{});
      std::vector<AnalyticRecord> records;
      for (const CellSpec& cell : cfg.cells()) records.push_back(analytic_record(cell));
      Sink sink(analytic_opts.out);
      write_analytic_records(sink.stream(), records, cfg.format);
      sink.close();
      return kExitOk;
    }
    if (*mc) {
      const SweepConfig cfg = to_config(mc_opts, mc_cfg);
      if (cfg.cells().size() != 1) throw std::invalid_argument("mc takes exactly one cell; use sweep for ranges");
      Sink sink(mc_opts.out);
      const SweepResult result = run_sweep(cfg, sink.stream());
      sink.close();
      warn_degenerate(result);
      return report_threshold(result, cfg.z_max);
    }
    if (*sweep) {
      if (!sweep_config.empty()) apply_config_file(sweep, sweep_config);
      const SweepConfig cfg = to_config(sweep_opts, sweep_cfg);
      if (!plot_script.empty() && (sweep_opts.out.empty() || cfg.format != OutputFormat::csv)) {
        throw std::invalid_argument("--plot-script needs --out with csv format");
      }
      Sink sink(sweep_opts.out);
      const SweepResult result = run_sweep(cfg, sink.stream());
      sink.close();
      if (!plot_script.empty()) {
        Sink script(plot_script);
        write_plot_script(script.stream(), sweep_opts.out, cfg.mode);
        script.close();
      }
      warn_degenerate(result);
      return report_threshold(result, cfg.z_max);
    }
    if (*encode) {
      const OutputFormat format = parse_output_format(encode_format);
      const EncodingRecord record = emit_encoding(encode_n);
      Sink sink(encode_out);
      write_encoding(sink.stream(), record, format);
      sink.close();
      return kExitOk;
    }
    if (*selftest) {
      return acceptance::run_all(std::cout, selftest_workers) ? kExitOk : kExitThreshold;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
