// Copyright 2026 The aoa-pl Authors. All rights reserved.
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

#include "aoa/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "aoa/config.hpp"
#include "aoa/diagnostics.hpp"
#include "aoa/experiment.hpp"

namespace aoa {
namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::string config_path;
  std::string out_dir;
  std::optional<int> seed_count;
  std::optional<int> threads;
  std::optional<std::int64_t> horizon;
  std::optional<double> x;
  std::vector<std::string> policies;
  std::string checkpoint;
};

void add_run_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "Experiment config (JSON)")
      ->required();
  cmd.add_option("--out", o.out_dir, "Output directory");
  cmd.add_option("--seed-count", o.seed_count, "Use seeds 1..N");
  cmd.add_option("--threads", o.threads, "Worker threads");
  cmd.add_option("--horizon", o.horizon, "Rounds per episode");
  cmd.add_option("--x", o.x, "Confidence parameter for every policy");
  cmd.add_option("--policy", o.policies, "Policy name (repeatable)");
  cmd.add_option("--checkpoint", o.checkpoint, "full or geometric")
      ->check(CLI::IsMember({"full", "geometric"}));
}

RunConfig apply(const Overrides& o) {
  RunConfig c = load_config(o.config_path);
  if (!o.policies.empty()) {
    c.policies.clear();
    for (const auto& name : o.policies) {
      if (!is_policy_name(name)) {
        throw ConfigError("--policy: unknown policy '" + name +
                          "'; valid names: " + policy_names_joined());
      }
      PolicySpec p;
      p.name = name;
      c.policies.push_back(p);
    }
  }
  if (o.x) {
    if (!(*o.x > 0)) throw ConfigError("--x: must be positive");
    for (auto& p : c.policies) p.x = *o.x;
  }
  if (o.seed_count) {
    if (*o.seed_count < 1) throw ConfigError("--seed-count: must be >= 1");
    c.seeds.clear();
    for (int n = 1; n <= *o.seed_count; ++n) c.seeds.push_back(n);
  }
  if (o.threads) {
    if (*o.threads < 1) throw ConfigError("--threads: must be >= 1");
    c.threads = *o.threads;
  }
  if (o.horizon) {
    if (*o.horizon < 2) throw ConfigError("--horizon: must be >= 2");
    c.horizon = *o.horizon;
  }
  if (o.checkpoint == "full") c.checkpoints = CheckpointKind::kFull;
  if (o.checkpoint == "geometric") c.checkpoints = CheckpointKind::kGeometric;
  if (!o.out_dir.empty()) {
    c.output_dir = o.out_dir;
  } else if (c.output_dir.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    c.output_dir = env != nullptr && *env != '\0' ? env : "results";
  }
  return c;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  return os;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" +
                             dir.string() + "'");
  }
}

void print_summary(std::ostream& out, const std::vector<ExperimentCell>& cells) {
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-12s %-8s %-12s %26s %26s\n",
                "instance", "policy", "sweep", "value", "final reg_top (sd)",
                "final reg_wtd (sd)");
  out << line;
  for (const auto& c : cells) {
    const auto& r = c.result;
    const auto last = r.mean_top.size() - 1;
    const std::string value =
        c.sweep_value ? format_double(*c.sweep_value) : std::string("-");
    std::snprintf(line, sizeof line,
                  "%-14s %-12s %-8s %-12s %14.4f (%9.4f) %14.4f (%9.4f)\n",
                  c.instance.c_str(), c.policy.c_str(), c.sweep_param.c_str(),
                  value.c_str(), r.mean_top(last), r.std_top(last),
                  r.mean_wtd(last), r.std_wtd(last));
    out << line;
  }
}

int cmd_run(const Overrides& o, std::ostream& out) {
  RunConfig c = apply(o);
  c.sweep.reset();
  const fs::path dir(c.output_dir);
  ensure_dir(dir);
  const auto cells = run_experiment(c);
  for (const auto& cell : cells) {
    const std::string stem = cell.instance + "__" + cell.policy;
    auto traces = open_output(dir / (stem + ".csv"));
    traces << kTraceHeader << '\n';
    write_trace_rows(traces, cell);
    auto agg = open_output(dir / (stem + "_agg.csv"));
    agg << kAggregateHeader << '\n';
    write_aggregate_rows(agg, cell);
  }
  print_summary(out, cells);
  out << "wrote " << 2 * cells.size() << " files to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const Overrides& o, const std::string& kind,
              const std::vector<double>& values, std::ostream& out) {
  RunConfig c = apply(o);
  SweepSpec sweep;
  sweep.kind = kind;
  if (!values.empty()) {
    sweep.values = values;
  } else if (c.sweep && c.sweep->kind == kind) {
    sweep.values = c.sweep->values;
  } else if (kind == "theta0") {
    sweep.values.assign(std::begin(kDefaultTheta0Sweep),
                        std::end(kDefaultTheta0Sweep));
  } else {
    sweep.values.assign(std::begin(kDefaultTopKSweep),
                        std::end(kDefaultTopKSweep));
  }
  for (double v : sweep.values) {
    if (!(v > 0)) throw ConfigError("--values: must be positive");
    if (kind == "topk" && v != std::floor(v)) {
      throw ConfigError("--values: k values must be integers");
    }
  }
  c.sweep = sweep;
  const fs::path dir(c.output_dir);
  ensure_dir(dir);
  const auto cells = run_experiment(c);
  const std::string stem =
      (cells.empty() ? c.instance.name : cells.front().instance) + "__sweep_" +
      kind;
  auto traces = open_output(dir / (stem + ".csv"));
  traces << kTraceHeader << '\n';
  auto agg = open_output(dir / (stem + "_agg.csv"));
  agg << kAggregateHeader << '\n';
  for (const auto& cell : cells) {
    write_trace_rows(traces, cell);
    write_aggregate_rows(agg, cell);
  }
  print_summary(out, cells);
  out << "wrote " << stem << ".csv and " << stem << "_agg.csv to "
      << dir.string() << '\n';
  return kExitOk;
}

struct OracleOptions {
  std::string config_path;
  int instances = 1000;
  int max_items = 12;
  double lambda_tol = kDefaultLambdaTolerance;
  std::uint64_t seed = 1;
  int reps = 500;
  std::int64_t horizon = 2000;
};

int cmd_oracle_check(const OracleOptions& o, std::ostream& out,
                     std::ostream& err) {
  int max_items = o.max_items;
  PLInstance coverage_inst = make_arith(10, 1.0, 0.1).with_cap(3);
  if (!o.config_path.empty()) {
    const RunConfig c = load_config(o.config_path);
    max_items = c.instance.num_items;
    if (max_items > 12) {
      throw ConfigError(
          "instance.num_items=" + std::to_string(max_items) +
          ": oracle-check enumerates every subset and accepts K <= 12; "
          "use a smaller instance for the self-test");
    }
    coverage_inst = build_instance(c.instance, FeedbackSpec::winner());
  }
  if (max_items < 1 || max_items > 12) {
    throw ConfigError("--max-items: must lie in [1, 12]");
  }

  bool ok = true;
  const auto check = check_optimizer(o.instances, max_items, o.lambda_tol, o.seed);
  out << check.matches << '/' << check.instances << " optimizer matches"
      << " (worst revenue gap " << check.worst_gap << ")\n";
  for (const auto& f : check.failures) err << "  mismatch " << f << '\n';
  ok = ok && check.matches == check.instances;

  const double x = 2.0 * std::log(static_cast<double>(o.horizon));
  const double bound = 0.02;
  for (double p : {0.1, 0.5, 0.9}) {
    const double rate =
        pairwise_violation_rate(p, o.horizon, x, o.reps, o.seed + 17);
    const bool pass = rate <= bound;
    out << (pass ? "PASS" : "FAIL") << " pairwise coverage p=" << p
        << ": violation rate " << rate << " <= " << bound << '\n';
    ok = ok && pass;
  }
  const double rate =
      theta_violation_rate(coverage_inst, o.horizon, x, o.reps, o.seed + 29);
  const bool pass = rate <= bound;
  out << (pass ? "PASS" : "FAIL") << " score coverage on "
      << coverage_inst.name() << ": violation rate " << rate << " <= " << bound
      << '\n';
  ok = ok && pass;
  return ok ? kExitOk : kExitSelfTest;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Active assortment optimization under Plackett-Luce choice"};
  app.require_subcommand(1);

  Overrides run_opts;
  auto* run = app.add_subcommand("run", "Run every configured policy");
  add_run_options(*run, run_opts);

  Overrides sweep_opts;
  std::string sweep_kind;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Sweep theta0 or top-k length");
  sweep->add_option("kind", sweep_kind, "theta0 or topk")
      ->required()
      ->check(CLI::IsMember({"theta0", "topk"}));
  sweep->add_option("--values", sweep_values, "Sweep values")->delimiter(',');
  add_run_options(*sweep, sweep_opts);

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle-check",
                                    "Optimizer and confidence-bound self-test");
  oracle->add_option("--config", oracle_opts.config_path,
                     "Config whose instance sets K (<= 12)");
  oracle->add_option("--instances", oracle_opts.instances,
                     "Random optimizer instances");
  oracle->add_option("--max-items", oracle_opts.max_items,
                     "Largest K without --config");
  oracle->add_option("--lambda-tol", oracle_opts.lambda_tol,
                     "Level-search tolerance under test");
  oracle->add_option("--seed", oracle_opts.seed, "Seed");
  oracle->add_option("--reps", oracle_opts.reps, "Coverage repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(run_opts, out);
    if (*sweep) return cmd_sweep(sweep_opts, sweep_kind, sweep_values, out);
    return cmd_oracle_check(oracle_opts, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace aoa
