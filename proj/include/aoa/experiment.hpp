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

// Running configured experiments and writing their CSV files.
//
// Per-seed schema (header is fixed):
//   instance,policy,sweep_param,sweep_value,seed,t,reg_top_cum,reg_wtd_cum
// Aggregate schema:
//   instance,policy,sweep_param,sweep_value,t,mean_reg_top_cum,
//   std_reg_top_cum,mean_reg_wtd_cum,std_reg_wtd_cum
// Plain runs write sweep_param "none" and an empty sweep_value. Floats use
// the shortest decimal that round-trips.

#ifndef AOA_EXPERIMENT_HPP_
#define AOA_EXPERIMENT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aoa/config.hpp"
#include "aoa/harness.hpp"

namespace aoa {

inline constexpr std::string_view kTraceHeader =
    "instance,policy,sweep_param,sweep_value,seed,t,reg_top_cum,reg_wtd_cum";
inline constexpr std::string_view kAggregateHeader =
    "instance,policy,sweep_param,sweep_value,t,mean_reg_top_cum,"
    "std_reg_top_cum,mean_reg_wtd_cum,std_reg_wtd_cum";

std::string format_double(double v);

struct ExperimentCell {
  std::string instance;
  std::string policy;
  std::string sweep_param = "none";
  std::optional<double> sweep_value;
  BatchResult result;
};

// One batch per (sweep value, policy), in config order.
std::vector<ExperimentCell> run_experiment(const RunConfig& config);

// Batch configuration for one cell; sweep_value overrides theta0 or k.
BatchConfig batch_config(const RunConfig& config, const PolicySpec& policy,
                         std::optional<double> sweep_value = std::nullopt);

void write_trace_rows(std::ostream& os, const ExperimentCell& cell);
void write_aggregate_rows(std::ostream& os, const ExperimentCell& cell);

}  // namespace aoa

#endif  // AOA_EXPERIMENT_HPP_
