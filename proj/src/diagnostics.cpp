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

#include "aoa/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aoa/estimators.hpp"
#include "aoa/policies.hpp"

namespace aoa {

RandomAssortmentProblem random_assortment_problem(int max_items, Rng& rng) {
  const int k = 1 + static_cast<int>(uniform_index(rng, max_items));
  RandomAssortmentProblem p;
  p.cap = 1 + static_cast<int>(uniform_index(rng, k));
  p.scores.resize(k + 1);
  p.weights.resize(k + 1);
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (int i = 0; i <= k; ++i) {
    p.scores(i) = std::exp(lo + (hi - lo) * uniform01(rng));
    p.weights(i) = i == 0 ? 0.0 : uniform01(rng);
  }
  return p;
}

OptimizerCheck check_optimizer(int instances, int max_items,
                               double lambda_tolerance, std::uint64_t seed,
                               double gap_tolerance) {
  OptimizerCheck out;
  Rng rng(seed);
  for (int n = 0; n < instances; ++n) {
    const auto p = random_assortment_problem(max_items, rng);
    const Assortment fast =
        max_weighted_assortment(p.scores, p.weights, p.cap, lambda_tolerance);
    const auto [exact, best] = brute_force_assortment(p.scores, p.weights, p.cap);
    const double gap = best - expected_revenue(p.scores, p.weights, fast);
    out.worst_gap = std::max(out.worst_gap, gap);
    ++out.instances;
    if (gap <= gap_tolerance && fast.size() <= p.cap) {
      ++out.matches;
    } else {
      std::ostringstream os;
      os.precision(17);
      os << "case " << n << ": K=" << p.scores.size() - 1 << " m=" << p.cap
         << " parametric " << to_string(fast) << " vs exhaustive "
         << to_string(exact) << ", revenue gap " << gap;
      out.failures.push_back(os.str());
    }
  }
  return out;
}

double pairwise_violation_rate(double p, std::int64_t horizon, double x,
                               int reps, std::uint64_t seed) {
  Rng rng(seed);
  int violations = 0;
  for (int r = 0; r < reps; ++r) {
    std::int64_t wins = 0;
    bool violated = false;
    for (std::int64_t n = 1; n <= horizon; ++n) {
      if (uniform01(rng) < p) ++wins;
      if (!violated && (p > p_ucb_from_counts(wins, n, x) ||
                        1.0 - p > p_ucb_from_counts(n - wins, n, x))) {
        violated = true;
      }
    }
    violations += violated;
  }
  return static_cast<double>(violations) / reps;
}

double theta_violation_rate(const PLInstance& inst, std::int64_t horizon,
                            double x, int reps, std::uint64_t seed) {
  const int k = inst.num_items();
  const UcbParams params{x, std::numeric_limits<double>::infinity()};
  int violations = 0;
  for (int r = 0; r < reps; ++r) {
    Rng env(derive_seed(seed, 2 * r));
    UniformPolicy offer(ProblemInfo::of(inst));
    offer.reset(derive_seed(seed, 2 * r + 1));
    WinMatrix wm(k);
    bool violated = false;
    for (std::int64_t t = 1; t <= horizon && !violated; ++t) {
      const Assortment s = offer.select(t);
      rank_break_winner(wm, s, sample_winner(inst, s, env).item);
      for (int i = 1; i <= k; ++i) {
        if (inst.theta(i) / inst.theta0() > theta_ucb(wm, i, params)) {
          violated = true;
          break;
        }
      }
    }
    violations += violated;
  }
  return static_cast<double>(violations) / reps;
}

}  // namespace aoa
