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

// Self-tests: optimizer-versus-enumeration equivalence and empirical
// coverage of the confidence bounds.

#ifndef AOA_DIAGNOSTICS_HPP_
#define AOA_DIAGNOSTICS_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "aoa/assortment_opt.hpp"
#include "aoa/pl_model.hpp"

namespace aoa {

struct RandomAssortmentProblem {
  Eigen::VectorXd scores;   // entry 0 is the no-choice score
  Eigen::VectorXd weights;  // entry 0 unused
  int cap = 1;
};

// K uniform in [1, max_items], m uniform in [1, K], scores (including the
// no-choice score) log-uniform in [1e-3, 1e3], weights uniform in [0, 1).
RandomAssortmentProblem random_assortment_problem(int max_items, Rng& rng);

struct OptimizerCheck {
  int instances = 0;
  int matches = 0;
  double worst_gap = 0;
  std::vector<std::string> failures;
};

// Compares max_weighted_assortment against brute_force_assortment; a case
// matches when the revenue gap is at most `gap_tolerance`.
OptimizerCheck check_optimizer(int instances, int max_items,
                               double lambda_tolerance, std::uint64_t seed,
                               double gap_tolerance = 1e-9);

// Fraction of repetitions in which p > p_ucb (for either orientation of the
// pair) at some point of a stream of `horizon` Bernoulli(p) comparisons.
double pairwise_violation_rate(double p, std::int64_t horizon, double x,
                               int reps, std::uint64_t seed);

// Fraction of repetitions in which θ_i / θ_0 > θ_i^ucb for some item and
// round, when a uniformly random m-subset is offered each round and the
// winner is rank-broken.
double theta_violation_rate(const PLInstance& inst, std::int64_t horizon,
                            double x, int reps, std::uint64_t seed);

}  // namespace aoa

#endif  // AOA_DIAGNOSTICS_HPP_
