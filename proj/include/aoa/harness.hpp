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

// Episode execution, regret accounting and seed batching.
//
// Regret is always the expected per-round loss under the ground truth:
//   top:  (Θ_{S*} - Θ_{S_t}) / m
//   wtd:  R(S*, θ) - R(S_t, θ)
// Feedback only ever reaches the policy.

#ifndef AOA_HARNESS_HPP_
#define AOA_HARNESS_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aoa/pl_model.hpp"
#include "aoa/policies.hpp"

namespace aoa {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimalSet {
  Assortment set;
  double value = 0;  // Θ_{S*} for Top-m, R(S*, θ) for weighted
};

// Uses brute force for K ≤ 12 and a full-precision level search above.
OptimalSet compute_sstar(const PLInstance& inst, Objective objective);

enum class CheckpointKind { kGeometric, kFull };

// t = ⌈1.1^j⌉ deduplicated, plus T.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon,
                                                double ratio = 1.1);
std::vector<std::int64_t> make_checkpoints(CheckpointKind kind,
                                           std::int64_t horizon);

struct TracePoint {
  std::int64_t t = 0;
  double reg_top = 0;
  double reg_wtd = 0;
  bool operator==(const TracePoint&) const = default;
};

struct RegretTrace {
  std::vector<TracePoint> points;
  std::uint64_t seed = 0;
  std::string policy;
  std::string instance;
  bool operator==(const RegretTrace&) const = default;
};

// Optional per-round observer: (t, S_t, feedback).
using RoundHook =
    std::function<void(std::int64_t, const Assortment&, const Feedback&)>;

// Runs T rounds against `inst`. The policy is reset with a seed derived
// from `seed`; the environment draws from an independent derived stream.
// Throws ConfigError if the policy cannot consume the instance's feedback.
RegretTrace run_episode(const PLInstance& inst, Policy& policy,
                        std::int64_t horizon, std::uint64_t seed,
                        std::span<const std::int64_t> checkpoints,
                        const RoundHook& hook = {});

struct BatchConfig {
  PLInstance instance;
  PolicySpec policy;
  std::int64_t horizon = 1000;
  std::vector<std::uint64_t> seeds;
  CheckpointKind checkpoints = CheckpointKind::kGeometric;
  // Relabel items by a per-seed random permutation, so that index-based
  // tie-breaking carries no information about the ground truth.
  bool permute_items = false;
  int threads = 1;
};

struct BatchResult {
  std::vector<std::int64_t> t;
  Eigen::VectorXd mean_top, std_top, mean_wtd, std_wtd;
  std::vector<std::uint64_t> seeds;  // sorted
  std::string fingerprint;
  std::vector<RegretTrace> traces;  // sorted by seed

  double final_mean_wtd() const { return mean_wtd(mean_wtd.size() - 1); }
  double final_std_wtd() const { return std_wtd(std_wtd.size() - 1); }
  double final_mean_top() const { return mean_top(mean_top.size() - 1); }
};

// The episode instance for a seed (relabeled when permute_items is set).
PLInstance episode_instance(const BatchConfig& config, std::uint64_t seed);

BatchResult run_batch(const BatchConfig& config);

// Per-checkpoint mean and sample standard deviation across traces, with
// traces ordered by seed and pairwise summation.
BatchResult aggregate(std::vector<RegretTrace> traces);

// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace aoa

#endif  // AOA_HARNESS_HPP_
