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

#include "aoa/experiment.hpp"

#include <charconv>
#include <cmath>

namespace aoa {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

BatchConfig batch_config(const RunConfig& config, const PolicySpec& policy,
                         std::optional<double> sweep_value) {
  InstanceSpec spec = config.instance;
  FeedbackSpec feedback = config.feedback;
  if (sweep_value && config.sweep) {
    if (config.sweep->kind == "theta0") {
      spec.theta0 = *sweep_value;
    } else {
      const auto k = static_cast<int>(std::lround(*sweep_value));
      if (k > spec.cap) {
        throw ConfigError("sweep.values: k=" + std::to_string(k) +
                          " exceeds instance.cap");
      }
      feedback = FeedbackSpec::top_k(k);
    }
  }
  BatchConfig b{build_instance(spec, feedback), policy, config.horizon,
                config.seeds, config.checkpoints, spec.permute_items,
                config.threads};
  return b;
}

std::vector<ExperimentCell> run_experiment(const RunConfig& config) {
  std::vector<std::optional<double>> values;
  if (config.sweep) {
    for (double v : config.sweep->values) values.emplace_back(v);
  } else {
    values.emplace_back(std::nullopt);
  }
  // Validate every cell before spending time on any of them.
  for (const auto& v : values) {
    for (const auto& p : config.policies) {
      BatchConfig b = batch_config(config, p, v);
      auto probe = make_policy(p, b.instance, b.horizon);
      if (!probe->accepts(b.instance.feedback())) {
        throw ConfigError("policy " + p.name +
                          " cannot consume the configured feedback kind");
      }
    }
  }

  std::vector<ExperimentCell> cells;
  for (const auto& v : values) {
    for (const auto& p : config.policies) {
      BatchConfig b = batch_config(config, p, v);
      ExperimentCell cell;
      cell.instance = b.instance.name();
      cell.policy = p.name;
      if (config.sweep) cell.sweep_param = config.sweep->kind;
      cell.sweep_value = v;
      cell.result = run_batch(b);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

namespace {

void write_key(std::ostream& os, const ExperimentCell& cell) {
  os << cell.instance << ',' << cell.policy << ',' << cell.sweep_param << ','
     << (cell.sweep_value ? format_double(*cell.sweep_value) : "") << ',';
}

}  // namespace

void write_trace_rows(std::ostream& os, const ExperimentCell& cell) {
  for (const auto& trace : cell.result.traces) {
    for (const auto& p : trace.points) {
      write_key(os, cell);
      os << trace.seed << ',' << p.t << ',' << format_double(p.reg_top) << ','
         << format_double(p.reg_wtd) << '\n';
    }
  }
}

void write_aggregate_rows(std::ostream& os, const ExperimentCell& cell) {
  const BatchResult& r = cell.result;
  for (std::size_t n = 0; n < r.t.size(); ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    write_key(os, cell);
    os << r.t[n] << ',' << format_double(r.mean_top(i)) << ','
       << format_double(r.std_top(i)) << ',' << format_double(r.mean_wtd(i))
       << ',' << format_double(r.std_wtd(i)) << '\n';
  }
}

}  // namespace aoa
