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

// Experiment configuration, stored as JSON.
//
//   {
//     "instance": {
//       "name": "arith10", "generator": "arith", "num_items": 10,
//       "top": 1.0, "gap": 0.1, "theta0": 1.0, "cap": 3,
//       "weights": {"kind": "ones"}, "permute_items": true
//     },
//     "feedback": {"kind": "winner"},
//     "policies": [{"name": "aoa-rb-wtd"}, {"name": "mnl-ucb"}],
//     "horizon": 10000,
//     "seeds": {"count": 20, "base": 1},
//     "checkpoints": "geometric",
//     "threads": 1,
//     "output_dir": "out",
//     "sweep": {"kind": "theta0", "values": [1, 0.1, 0.01]}
//   }
//
// Generators: "arith" (top, gap), "bad" (base, spike_index, spike) and
// "explicit" (theta: [...]). Weights: {"kind": "ones"},
// {"kind": "explicit", "values": [...]} or {"kind": "uniform", "seed": n}.
// Seeds may also be given as an explicit list. Unknown keys are errors.

#ifndef AOA_CONFIG_HPP_
#define AOA_CONFIG_HPP_

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoa/harness.hpp"
#include "aoa/pl_model.hpp"
#include "aoa/policies.hpp"

namespace aoa {

struct InstanceSpec {
  std::string name = "arith10";
  std::string generator = "arith";
  int num_items = 10;
  double top = 1.0;
  double gap = 0.1;
  double base = 0.6;
  int spike_index = 1;
  double spike = 0.8;
  std::vector<double> theta;
  double theta0 = 1.0;
  int cap = 3;
  std::string weights_kind = "ones";
  std::vector<double> weights;
  std::uint64_t weights_seed = 0;
  bool permute_items = false;

  bool operator==(const InstanceSpec&) const = default;
};

inline constexpr double kDefaultTheta0Sweep[] = {1,    0.5,   0.1,  0.05,
                                                 0.01, 0.005, 0.001};
inline constexpr double kDefaultTopKSweep[] = {1, 2, 4, 8};

struct SweepSpec {
  std::string kind;  // "theta0" or "topk"
  std::vector<double> values;

  bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
  InstanceSpec instance;
  FeedbackSpec feedback;
  std::vector<PolicySpec> policies;
  std::int64_t horizon = 1000;
  std::vector<std::uint64_t> seeds = {1};
  CheckpointKind checkpoints = CheckpointKind::kGeometric;
  int threads = 1;
  std::string output_dir;
  std::optional<SweepSpec> sweep;

  bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

PLInstance build_instance(const InstanceSpec& spec, FeedbackSpec feedback);

}  // namespace aoa

#endif  // AOA_CONFIG_HPP_
