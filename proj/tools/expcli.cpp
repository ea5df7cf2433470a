// Copyright 2026 The photonic-bsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expcli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsa/conditions.hpp"
#include "bsa/errors.hpp"
#include "bsa/infometrics.hpp"
#include "bsa/matrix_io.hpp"
#include "bsa/optimizer.hpp"
#include "bsa/parallel.hpp"
#include "bsa/rng.hpp"
#include "bsa/unitary.hpp"

#ifndef BSA_VERSION
#define BSA_VERSION "unknown"
#endif

namespace bsa::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kCsvManifestPrefix = "# manifest: ";

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

json matrix_json(const CircuitMatrix& u) { return json::parse(matrix_to_json(u)); }

json report_json(const InfoReport& r) {
  return {{"h_cond", r.h_cond},
          {"h_cond_garbage", r.h_cond_garbage},
          {"h_mutual", r.h_mutual},
          {"h_x", r.h_x},
          {"s_rho", r.s_rho}};
}

/// Everything that describes a run. The "timestamp" object holds the only
/// fields that change between identical invocations.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  json config = json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  std::string started_utc = utc_now();

  json to_json() const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return {{"command", command},
            {"argv", argv},
            {"config", config},
            {"seed", seed},
            {"version", BSA_VERSION},
            {"rng", std::string(Rng::kAlgorithm)},
            {"inputs", inputs},
            {"outputs", outputs},
            {"timestamp", {{"utc", started_utc}, {"wall_time_s", wall}}}};
  }
};

std::string csv_header(const Manifest& m) {
  return std::string(kCsvManifestPrefix) + m.to_json().dump() + "\n";
}

/// Shared flags.
struct Common {
  std::uint64_t seed = 1;
  int parallelism = default_parallelism();
  double tol = kZeroAmplitudeTol;
  std::string out;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_tol) {
  cmd->add_option("--seed", c.seed, "Base random seed");
  cmd->add_option("--parallelism", c.parallelism, "Worker threads")
      ->check(CLI::PositiveNumber);
  if (with_tol) cmd->add_option("--tol", c.tol, "Zero tolerance for entries and amplitudes");
  cmd->add_option("--out", c.out, "Output file");
  cmd->add_flag("--quiet", c.quiet, "Suppress progress lines on stderr");
}

struct OptimizeFlags {
  int n_a = 0;
  int restarts = 20;
  int iterations = 2000;
  double init_scale = OptimizerConfig{}.init_scale;
  double lambda_scale = OptimizerConfig{}.lambda_scale;
  double convergence_tol = OptimizerConfig{}.convergence_tol;
  double gradient_step = OptimizerConfig{}.gradient_step;
  std::string gradient = "analytic";
  int hops = 0;
  double hop_scale = OptimizerConfig{}.hop_scale;
};

void add_optimizer_flags(CLI::App* cmd, OptimizeFlags& f) {
  cmd->add_option("--restarts", f.restarts, "Independent BFGS starts");
  cmd->add_option("--iters", f.iterations, "Iteration cap per restart");
  cmd->add_option("--init-scale", f.init_scale, "Half-width of the initial generator entries");
  cmd->add_option("--lambda-scale", f.lambda_scale, "Half-width of the initial lambdas");
  cmd->add_option("--tol", f.convergence_tol, "Gradient-norm stopping threshold");
  cmd->add_option("--gradient-step", f.gradient_step, "Finite-difference step");
  cmd->add_option("--gradient", f.gradient, "Gradient evaluation")
      ->check(CLI::IsMember({"analytic", "central"}));
  cmd->add_option("--hops", f.hops, "Basin-hopping rounds per restart");
  cmd->add_option("--hop-scale", f.hop_scale, "Standard deviation of hop perturbations");
}

OptimizerConfig make_config(const OptimizeFlags& f, int n_a, const Common& c) {
  OptimizerConfig cfg;
  cfg.n_a = n_a;
  cfg.restarts = f.restarts;
  cfg.max_iterations = f.iterations;
  cfg.init_scale = f.init_scale;
  cfg.lambda_scale = f.lambda_scale;
  cfg.convergence_tol = f.convergence_tol;
  cfg.gradient_step = f.gradient_step;
  cfg.gradient = f.gradient == "central" ? GradientMode::CentralDifference : GradientMode::Analytic;
  cfg.hops = f.hops;
  cfg.hop_scale = f.hop_scale;
  cfg.seed = c.seed;
  cfg.parallelism = c.parallelism;
  cfg.validate();
  return cfg;
}

json config_json(const OptimizerConfig& cfg) {
  return {{"n_a", cfg.n_a},
          {"restarts", cfg.restarts},
          {"max_iterations", cfg.max_iterations},
          {"init_scale", cfg.init_scale},
          {"lambda_scale", cfg.lambda_scale},
          {"convergence_tol", cfg.convergence_tol},
          {"gradient_step", cfg.gradient_step},
          {"gradient", cfg.gradient == GradientMode::Analytic ? "analytic" : "central"},
          {"hops", cfg.hops},
          {"hop_scale", cfg.hop_scale},
          {"seed", cfg.seed}};
}

RestartCallback progress(std::ostream& err, bool quiet, int n_a) {
  if (quiet) return {};
  return [&err, n_a](const RestartRecord& r, double best) {
    json line = {{"event", "restart"},    {"n_a", n_a},
                 {"index", r.index},      {"h_mutual", r.h_mutual},
                 {"best", best},          {"iterations", r.iterations},
                 {"termination", to_string(r.termination)}};
    err << line.dump() << std::endl;
  };
}

json result_json(const OptimizationResult& r, int n_a) {
  json restarts = json::array();
  for (const auto& rec : r.per_restart) {
    restarts.push_back({{"index", rec.index},
                        {"seed", rec.seed},
                        {"h_mutual", rec.h_mutual},
                        {"objective", rec.objective},
                        {"gradient_norm", rec.gradient_norm},
                        {"iterations", rec.iterations},
                        {"converged", rec.converged},
                        {"hops_accepted", rec.hops_accepted},
                        {"termination", to_string(rec.termination)}});
  }
  std::vector<double> params(r.best_params.values.data(),
                             r.best_params.values.data() + r.best_params.values.size());
  return {{"n_a", n_a},
          {"best_restart", r.best_restart},
          {"report", report_json(r.report)},
          {"distance_to_unitary", matrix_distance_to_unitary(r.best_matrix)},
          {"best_params", params},
          {"best_matrix", matrix_json(r.best_matrix)},
          {"per_restart", restarts}};
}

/// Reads a matrix file, or the best matrix stored in an optimize result.
CircuitMatrix load_matrix(const fs::path& path) {
  const std::string text = read_text(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    return matrix_from_json(text);  // rethrows with the line number
  }
  if (doc.contains("result") && doc["result"].contains("best_matrix")) {
    return matrix_from_json(doc["result"]["best_matrix"].dump());
  }
  return matrix_from_json(text);
}

int resolve_n_a(const CircuitMatrix& u, int n_a) {
  if (n_a < 0) n_a = static_cast<int>(u.rows()) - 4;
  if (n_a < 0 || u.rows() != n_a + 4) {
    throw ContractViolation("matrix is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + " but --na " + std::to_string(n_a) +
                            " needs " + std::to_string(n_a + 4) + " modes");
  }
  return n_a;
}

json table_json(const OutcomeTable& t) {
  json outcomes = json::array();
  json rows = json::array();
  for (std::size_t y = 0; y < t.outcomes.size(); ++y) {
    outcomes.push_back(t.outcomes[y].occupations);
    rows.push_back(t.rows[y]);
  }
  return {{"n_a", t.n_a}, {"m", t.modes}, {"outcomes", outcomes}, {"p", rows},
          {"garbage", t.garbage}};
}

std::string roman(int id) {
  static const char* names[] = {"", "I", "II", "III", "IV"};
  return (id >= 1 && id <= 4) ? names[id] : "?";
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw CLI::ValidationError(flag, "'" + item + "' is not an integer");
    }
    values.push_back(v);
  }
  return values;
}

// --- subcommands -----------------------------------------------------------

int cmd_optimize(Manifest& m, const OptimizeFlags& f, int n_a, const Common& c, std::ostream& out,
                 std::ostream& err) {
  const OptimizerConfig cfg = make_config(f, n_a, c);
  m.config = config_json(cfg);
  m.seed = cfg.seed;
  if (!c.out.empty()) m.outputs.push_back(c.out);
  const OptimizationResult r = optimize(cfg, progress(err, c.quiet, n_a));
  if (!c.out.empty()) {
    const json doc = {{"manifest", m.to_json()}, {"result", result_json(r, n_a)}};
    write_text(c.out, doc.dump(1) + "\n");
  }
  out << fixed6(r.report.h_mutual) << "\n";
  return kOk;
}

int cmd_evaluate(Manifest& m, const std::string& matrix_path, int n_a, const std::string& table_path,
                 const Common& c, std::ostream& out) {
  m.inputs.push_back(matrix_path);
  const CircuitMatrix u = load_matrix(matrix_path);
  n_a = resolve_n_a(u, n_a);
  m.config = {{"n_a", n_a}, {"matrix", matrix_path}};
  const OutcomeTable t = outcome_table(u, n_a, c.parallelism);
  const InfoReport r = mutual_information(t);
  out << "h_cond " << fixed6(r.h_cond) << "\n"
      << "h_cond_garbage " << fixed6(r.h_cond_garbage) << "\n"
      << "h_mutual " << fixed6(r.h_mutual) << "\n"
      << "h_x " << fixed6(r.h_x) << "\n"
      << "s_rho " << fixed6(r.s_rho) << "\n";
  if (!table_path.empty()) {
    m.outputs.push_back(table_path);
    const json doc = {{"manifest", m.to_json()}, {"report", report_json(r)}, {"table", table_json(t)}};
    write_text(table_path, doc.dump(1) + "\n");
  }
  return kOk;
}

int cmd_sweep(Manifest& m, const OptimizeFlags& f, const std::vector<int>& na_list, const Common& c,
              std::ostream& out, std::ostream& err) {
  if (na_list.empty()) throw CLI::ValidationError("--na-list", "needs at least one value");
  std::vector<OptimizerConfig> configs;
  for (int n_a : na_list) configs.push_back(make_config(f, n_a, c));
  m.config = config_json(configs.front());
  m.config.erase("n_a");
  m.config["na_list"] = na_list;
  m.seed = c.seed;
  if (!c.out.empty()) m.outputs.push_back(c.out);

  std::string csv = "n_a,best_h_mutual,restarts,converged_restarts\n";
  out << "n_a best_h_mutual\n";
  for (const auto& cfg : configs) {
    const OptimizationResult r = optimize(cfg, progress(err, c.quiet, cfg.n_a));
    int converged = 0;
    for (const auto& rec : r.per_restart) converged += rec.converged ? 1 : 0;
    csv += std::to_string(cfg.n_a) + "," + full_precision(r.report.h_mutual) + "," +
           std::to_string(cfg.restarts) + "," + std::to_string(converged) + "\n";
    out << cfg.n_a << " " << fixed6(r.report.h_mutual) << std::endl;
  }
  if (!c.out.empty()) write_text(c.out, csv_header(m) + csv);
  return kOk;
}

int cmd_conditions(Manifest& m, int n_a, int trials, const std::string& csv_path, const Common& c,
                   std::ostream& out) {
  m.config = {{"n_a", n_a}, {"trials", trials}};
  m.seed = c.seed;
  const ComparisonRecord rec = conditioned_vs_unconditioned_experiment(n_a, trials, c.seed,
                                                                       c.parallelism);
  fs::path csv = csv_path;
  if (csv.empty() && !c.out.empty()) csv = fs::path(c.out).replace_extension(".csv");
  if (!c.out.empty()) m.outputs.push_back(c.out);
  if (!csv.empty()) m.outputs.push_back(csv.string());

  auto summary = [](const PopulationSummary& s) {
    return json{{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min},
                {"median", s.median}, {"max", s.max}};
  };
  double max_cond_mass = 0.0;
  int unconditioned_bunching = 0;
  for (int t = 0; t < trials; ++t) {
    max_cond_mass = std::max(max_cond_mass, rec.conditioned_bunched_mass[static_cast<std::size_t>(t)]);
    if (rec.unconditioned_bunched_mass[static_cast<std::size_t>(t)] > 0.0) ++unconditioned_bunching;
  }
  if (!csv.empty()) {
    std::string text = csv_header(m);
    text += "trial,conditioned_h_mutual,unconditioned_h_mutual,conditioned_bunched_mass,"
            "unconditioned_bunched_mass\n";
    for (std::size_t t = 0; t < rec.conditioned_h.size(); ++t) {
      text += std::to_string(t) + "," + full_precision(rec.conditioned_h[t]) + "," +
              full_precision(rec.unconditioned_h[t]) + "," +
              full_precision(rec.conditioned_bunched_mass[t]) + "," +
              full_precision(rec.unconditioned_bunched_mass[t]) + "\n";
    }
    write_text(csv, text);
  }
  if (!c.out.empty()) {
    const json doc = {
        {"manifest", m.to_json()},
        {"summary",
         {{"n_a", n_a},
          {"trials", trials},
          {"conditioned", summary(rec.conditioned)},
          {"unconditioned", summary(rec.unconditioned)},
          {"max_conditioned_bunched_mass", max_cond_mass},
          {"unconditioned_trials_with_bunching", unconditioned_bunching}}}};
    write_text(c.out, doc.dump(1) + "\n");
  }
  out << "population mean_h_mutual min max\n"
      << "conditioned " << fixed6(rec.conditioned.mean) << " " << fixed6(rec.conditioned.min) << " "
      << fixed6(rec.conditioned.max) << "\n"
      << "unconditioned " << fixed6(rec.unconditioned.mean) << " "
      << fixed6(rec.unconditioned.min) << " " << fixed6(rec.unconditioned.max) << "\n"
      << "max_conditioned_bunched_mass " << full_precision(max_cond_mass) << "\n";
  return kOk;
}

int cmd_check(Manifest& m, const std::string& matrix_path, int n_a, const std::string& stage_name,
              const Common& c, std::ostream& out) {
  m.inputs.push_back(matrix_path);
  const CircuitMatrix u = load_matrix(matrix_path);
  n_a = resolve_n_a(u, n_a);
  const ConditionStage stage = stage_name == "p0"   ? ConditionStage::P0
                               : stage_name == "p1" ? ConditionStage::P1
                                                    : ConditionStage::Full;
  const auto columns = check_column_conditions(u, n_a, c.tol, stage);
  const auto bunched = scan_bunched_two_mode(u, n_a, c.tol);

  bool all_columns = true;
  out << "stage " << to_string(stage) << " tol " << c.tol << "\n";
  for (const auto& v : columns) {
    out << "column " << v.column + 1 << ": ";
    if (v.ok()) {
      for (std::size_t i = 0; i < v.satisfied.size(); ++i) {
        out << (i ? "," : "") << roman(v.satisfied[i].condition);
      }
    } else {
      out << "FAILS";
      all_columns = false;
    }
    out << "  zero ancilla rows {";
    for (std::size_t i = 0; i < v.zero_ancilla_rows.size(); ++i) {
      out << (i ? "," : "") << v.zero_ancilla_rows[i] + 1;
    }
    out << "}\n";
  }
  int ambiguous = 0;
  for (const auto& v : bunched) {
    if (v.ambiguous) ++ambiguous;
  }
  out << "bunched two-mode outcomes " << bunched.size() << ", ambiguous " << ambiguous << "\n";
  const bool pass = all_columns && ambiguous == 0;
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kCheckFailed;
}

int cmd_sample(Manifest& m, const std::string& kind, int n_a, int modes, const Common& c,
               std::ostream& out) {
  m.config = {{"kind", kind}, {"n_a", n_a}, {"m", modes}};
  m.seed = c.seed;
  CircuitMatrix u;
  if (kind == "conditioned") {
    u = sample_conditioned_unitary(n_a, c.seed);
  } else {
    u = haar_random_unitary(modes > 0 ? modes : n_a + 4, c.seed);
  }
  if (c.out.empty()) {
    out << matrix_to_json(u);
  } else {
    write_text(c.out, matrix_to_json(u));
    out << "wrote " << c.out << "\n";
  }
  return kOk;
}

}  // namespace

nlohmann::json strip_timestamp(nlohmann::json doc) {
  if (doc.contains("manifest")) doc["manifest"].erase("timestamp");
  return doc;
}

nlohmann::json read_manifest(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (text.rfind(kCsvManifestPrefix, 0) == 0) {
    const auto end = text.find('\n');
    return json::parse(text.substr(kCsvManifestPrefix.size(), end - kCsvManifestPrefix.size()));
  }
  const json doc = json::parse(text);
  if (!doc.contains("manifest")) throw ParseError(path.string() + " has no embedded manifest");
  return doc["manifest"];
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-optical Bell-state analyzer simulator and optimizer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BSA_VERSION);

  Common common;
  OptimizeFlags flags;
  int n_a = 0;
  int n_a_optional = -1;
  int trials = 1000;
  int modes = 0;
  std::string na_list_text;
  std::string matrix_path;
  std::string table_path;
  std::string csv_path;
  std::string stage = "full";
  std::string kind = "haar";
  std::string rerun_path;

  auto* optimize_cmd = app.add_subcommand("optimize", "Maximize H(X:Y) for one ancilla count");
  optimize_cmd->add_option("--na", n_a, "Ancilla photons")->required()->check(CLI::NonNegativeNumber);
  add_optimizer_flags(optimize_cmd, flags);
  add_common(optimize_cmd, common, false);

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Information report for a stored matrix");
  evaluate_cmd->add_option("--matrix", matrix_path, "Matrix or optimize result file")->required();
  evaluate_cmd->add_option("--na", n_a_optional, "Ancilla photons (default: modes - 4)");
  evaluate_cmd->add_option("--table", table_path, "Write the full outcome table here");
  add_common(evaluate_cmd, common, false);

  auto* sweep_cmd = app.add_subcommand("sweep", "Best H(X:Y) for several ancilla counts");
  sweep_cmd->add_option("--na-list", na_list_text, "Comma-separated ancilla counts")->required();
  add_optimizer_flags(sweep_cmd, flags);
  add_common(sweep_cmd, common, false);

  auto* conditions_cmd =
      app.add_subcommand("conditions", "Conditioned versus Haar-random analyzers");
  conditions_cmd->add_option("--na", n_a, "Ancilla photons (even, >= 4)")->required();
  conditions_cmd->add_option("--trials", trials, "Matrices per population")
      ->check(CLI::PositiveNumber);
  conditions_cmd->add_option("--csv", csv_path, "Per-trial CSV (default: --out with .csv)");
  add_common(conditions_cmd, common, false);

  auto* check_cmd = app.add_subcommand("check", "Column conditions and bunched-outcome scan");
  check_cmd->add_option("--matrix", matrix_path, "Matrix or optimize result file")->required();
  check_cmd->add_option("--na", n_a_optional, "Ancilla photons (default: modes - 4)");
  check_cmd->add_option("--stage", stage, "Condition stage")
      ->check(CLI::IsMember({"p0", "p1", "full"}));
  add_common(check_cmd, common, true);

  auto* sample_cmd = app.add_subcommand("sample", "Write a Haar or conditioned matrix");
  sample_cmd->add_option("--kind", kind, "haar or conditioned")
      ->check(CLI::IsMember({"haar", "conditioned"}));
  sample_cmd->add_option("--na", n_a, "Ancilla photons")->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--m", modes, "Mode count for haar (default: na + 4)");
  add_common(sample_cmd, common, false);

  auto* rerun_cmd = app.add_subcommand("rerun", "Repeat the run recorded in a result manifest");
  rerun_cmd->add_option("result", rerun_path, "Result file with embedded manifest")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Manifest manifest;
  manifest.argv.assign(args.begin() + 1, args.end());
  try {
    if (*optimize_cmd) {
      manifest.command = "optimize";
      return cmd_optimize(manifest, flags, n_a, common, out, err);
    }
    if (*evaluate_cmd) {
      manifest.command = "evaluate";
      return cmd_evaluate(manifest, matrix_path, n_a_optional, table_path, common, out);
    }
    if (*sweep_cmd) {
      manifest.command = "sweep";
      return cmd_sweep(manifest, flags, parse_int_list("--na-list", na_list_text), common, out, err);
    }
    if (*conditions_cmd) {
      manifest.command = "conditions";
      return cmd_conditions(manifest, n_a, trials, csv_path, common, out);
    }
    if (*check_cmd) {
      manifest.command = "check";
      return cmd_check(manifest, matrix_path, n_a_optional, stage, common, out);
    }
    if (*sample_cmd) {
      manifest.command = "sample";
      return cmd_sample(manifest, kind, n_a, modes, common, out);
    }
    if (*rerun_cmd) {
      const json m = read_manifest(rerun_path);
      std::vector<std::string> again{args.front()};
      for (const auto& a : m.at("argv")) again.push_back(a.get<std::string>());
      return run(again, out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedConfiguration& e) {
    err << "unsupported configuration: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace bsa::cli
