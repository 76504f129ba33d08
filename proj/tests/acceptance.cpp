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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "aoa/config.hpp"
#include "aoa/diagnostics.hpp"
#include "aoa/experiment.hpp"
#include "aoa/harness.hpp"
#include "test_oracles.hpp"

namespace aoa {
namespace {

namespace oracle = testing_oracles;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int worker_threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<std::uint64_t> seeds(int n) {
  std::vector<std::uint64_t> out;
  for (int s = 1; s <= n; ++s) out.push_back(static_cast<std::uint64_t>(s));
  return out;
}

BatchResult batch(const PLInstance& inst, const std::string& policy,
                  std::int64_t horizon, int n_seeds,
                  CheckpointKind checkpoints = CheckpointKind::kGeometric) {
  BatchConfig c{inst, PolicySpec{policy}};
  c.horizon = horizon;
  c.checkpoints = checkpoints;
  c.seeds = seeds(n_seeds);
  c.permute_items = true;
  c.threads = worker_threads();
  return run_batch(c);
}

double mean_at(const BatchResult& r, std::int64_t t) {
  for (std::size_t n = 0; n < r.t.size(); ++n) {
    if (r.t[n] == t) return r.mean_wtd(n);
  }
  throw std::logic_error("checkpoint " + std::to_string(t) + " not recorded");
}

double standard_error(const BatchResult& r) {
  return r.final_std_wtd() / std::sqrt(static_cast<double>(r.seeds.size()));
}

Outcome optimizer_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const auto check = check_optimizer(1000, 12, kDefaultLambdaTolerance, 2024);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {check.matches == check.instances && secs < 10,
          fmt("%d/%d matches, worst gap %.3g, %.2f s (limit 10 s)",
              check.matches, check.instances, check.worst_gap, secs)};
}

Outcome sampler_fidelity() {
  const auto start = std::chrono::steady_clock::now();
  const int draws = 300000;
  Rng rng(make_rng(7, Stream::kEnvironment));
  double worst_winner = 0;
  for (int pair = 0; pair < 20; ++pair) {
    const int k = 2 + static_cast<int>(uniform_index(rng, 9));
    Eigen::VectorXd theta(k);
    for (int i = 0; i < k; ++i) theta(i) = std::exp(4 * uniform01(rng) - 2);
    const double theta0 = std::exp(4 * uniform01(rng) - 2);
    const PLInstance inst(theta, theta0, Eigen::VectorXd::Ones(k), k);
    std::vector<int> items;
    for (int i = 1; i <= k; ++i) {
      if (uniform01(rng) < 0.5) items.push_back(i);
    }
    if (items.empty()) items.push_back(1 + static_cast<int>(uniform_index(rng, k)));
    const Assortment s(items);
    std::vector<int> counts(k + 1, 0);
    for (int n = 0; n < draws; ++n) ++counts[sample_winner(inst, s, rng).item];
    double mass = theta0;
    for (int i : items) mass += inst.theta(i);
    std::vector<int> pool{0};
    pool.insert(pool.end(), items.begin(), items.end());
    for (int i : pool) {
      worst_winner = std::max(
          worst_winner, std::abs(counts[i] / double(draws) - inst.theta(i) / mass));
    }
  }

  // Joint law of the first k draws for |S| ≤ 3, all k ≤ |S| + 1.
  double worst_rank = 0;
  for (int size = 1; size <= 3; ++size) {
    Eigen::VectorXd theta(size);
    for (int i = 0; i < size; ++i) theta(i) = std::exp(2 * uniform01(rng) - 1);
    const PLInstance inst(theta, 0.3 + uniform01(rng),
                          Eigen::VectorXd::Ones(size), size);
    std::vector<int> items(size);
    for (int i = 0; i < size; ++i) items[i] = i + 1;
    std::vector<int> pool{0};
    pool.insert(pool.end(), items.begin(), items.end());
    for (int k = 1; k <= size + 1; ++k) {
      std::map<std::vector<int>, int> counts;
      for (int n = 0; n < draws; ++n) {
        ++counts[sample_topk(inst, Assortment(items), k, rng).items];
      }
      // Every ordered k-prefix of a permutation of the pool.
      std::vector<int> perm = pool;
      std::map<std::vector<int>, bool> seen;
      do {
        std::vector<int> prefix(perm.begin(), perm.begin() + k);
        if (seen.emplace(prefix, true).second) {
          const double p = oracle::ranking_probability(inst.scores(), pool, prefix);
          worst_rank =
              std::max(worst_rank, std::abs(counts[prefix] / double(draws) - p));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {worst_winner <= 0.01 && worst_rank <= 0.01 && secs < 30,
          fmt("worst winner deviation %.4f, worst top-k deviation %.4f "
              "(tolerance 0.01), %.1f s (limit 30 s)",
              worst_winner, worst_rank, secs)};
}

Outcome ucb_coverage() {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t horizon = 2000;
  const double x = 2 * std::log(double(horizon));
  const int reps = 500;
  double worst = 0;
  std::string parts;
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double rate = pairwise_violation_rate(p, horizon, x, reps, 11);
    worst = std::max(worst, rate);
    parts += fmt("p=%.1f:%.3f ", p, rate);
  }
  const auto inst = make_arith(10, 1.0, 0.1).with_cap(3);
  const double theta_rate = theta_violation_rate(inst, horizon, x, reps, 12);
  worst = std::max(worst, theta_rate);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {worst <= 0.02 && secs < 60,
          fmt("pairwise %sscore %.3f (bound 0.02), %.1f s (limit 60 s)",
              parts.c_str(), theta_rate, secs)};
}

Outcome regret_slope() {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t horizon = 40000;
  const auto inst = make_arith(10, 1.0, 0.1).with_cap(3);
  const auto rb = batch(inst, "aoa-rb-wtd", horizon, 20, CheckpointKind::kFull);
  const auto uni = batch(inst, "uniform", horizon, 20, CheckpointKind::kFull);
  const double rb_ratio = mean_at(rb, horizon) / mean_at(rb, horizon / 4);
  const double uni_ratio = mean_at(uni, horizon) / mean_at(uni, horizon / 4);
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {rb_ratio >= 1.3 && rb_ratio <= 3.0 && uni_ratio > 3.5 && secs < 300,
          fmt("aoa-rb-wtd Reg(T)/Reg(T/4) = %.3f in [1.3, 3.0] "
              "(%.2f / %.2f); uniform %.3f > 3.5; %.0f s (limit 300 s)",
              rb_ratio, mean_at(rb, horizon), mean_at(rb, horizon / 4),
              uni_ratio, secs)};
}

PLInstance separation_instance(double theta0) {
  return make_arith(20, 1.0, 0.05).with_cap(5).with_theta0(theta0);
}

Outcome weak_no_choice_separation(std::map<std::string, BatchResult>& low) {
  const auto start = std::chrono::steady_clock::now();
  const auto inst = separation_instance(0.01);
  for (const char* p : {"adpivot", "aoa-rb-wtd", "mnl-ucb"}) {
    low.emplace(p, batch(inst, p, 20000, 20));
  }
  const auto& ad = low.at("adpivot");
  const auto& rb = low.at("aoa-rb-wtd");
  const auto& mnl = low.at("mnl-ucb");
  const double se1 = std::hypot(standard_error(ad), standard_error(rb));
  const double se2 = std::hypot(standard_error(rb), standard_error(mnl));
  const double gap1 = rb.final_mean_wtd() - ad.final_mean_wtd();
  const double gap2 = mnl.final_mean_wtd() - rb.final_mean_wtd();
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return {gap1 >= 3 * se1 && gap2 >= 3 * se2 && secs < 600,
          fmt("adpivot %.2f (se %.2f) < aoa-rb-wtd %.2f (se %.2f) < mnl-ucb "
              "%.2f (se %.2f); gaps %.1f and %.1f pooled SE (need 3); "
              "%.0f s (limit 600 s)",
              ad.final_mean_wtd(), standard_error(ad), rb.final_mean_wtd(),
              standard_error(rb), mnl.final_mean_wtd(), standard_error(mnl),
              gap1 / se1, gap2 / se2, secs)};
}

Outcome theta0_monotonicity(const std::map<std::string, BatchResult>& low) {
  std::vector<double> gaps;
  std::string parts;
  for (double theta0 : {1.0, 0.1, 0.01}) {
    double ad, mnl;
    if (theta0 == 0.01) {
      ad = low.at("adpivot").final_mean_wtd();
      mnl = low.at("mnl-ucb").final_mean_wtd();
    } else {
      const auto inst = separation_instance(theta0);
      ad = batch(inst, "adpivot", 20000, 20).final_mean_wtd();
      mnl = batch(inst, "mnl-ucb", 20000, 20).final_mean_wtd();
    }
    gaps.push_back(ad - mnl);
    parts += fmt("theta0=%g: %.2f ", theta0, ad - mnl);
  }
  const bool pass = gaps[1] <= gaps[0] && gaps[2] <= gaps[1];
  return {pass, "adpivot - mnl-ucb final regret " + parts +
                    "(must not increase as theta0 falls)"};
}

Outcome topk_improvement() {
  const auto base = make_arith(20, 1.0, 0.05).with_cap(8);
  std::vector<double> finals;
  std::string parts;
  for (int k : {1, 2, 4}) {
    const auto r = batch(base.with_feedback(FeedbackSpec::top_k(k)), "aoa-rb-k",
                         10000, 20);
    finals.push_back(r.final_mean_wtd());
    parts += fmt("k=%d: %.3f (se %.3f) ", k, r.final_mean_wtd(),
                 standard_error(r));
  }
  return {finals[1] < finals[0] && finals[2] < finals[1],
          "aoa-rb-k final regret " + parts + "(must strictly decrease)"};
}

std::pair<std::string, std::string> csv_of(RunConfig config) {
  std::ostringstream traces, agg;
  traces << kTraceHeader << '\n';
  agg << kAggregateHeader << '\n';
  for (const auto& cell : run_experiment(config)) {
    write_trace_rows(traces, cell);
    write_aggregate_rows(agg, cell);
  }
  return {traces.str(), agg.str()};
}

Outcome determinism() {
  RunConfig c;
  c.instance.name = "det";
  c.instance.num_items = 12;
  c.instance.gap = 0.05;
  c.instance.cap = 4;
  c.instance.theta0 = 0.1;
  c.instance.permute_items = true;
  for (const char* p : {"aoa-rb-wtd", "adpivot", "mnl-ucb", "uniform"}) {
    c.policies.push_back(PolicySpec{p});
  }
  c.horizon = 3000;
  c.seeds = {4, 1, 7, 2, 9, 3, 8, 5};
  c.threads = 1;
  const auto reference = csv_of(c);
  bool same = true;
  int variants = 0;
  for (int threads : {1, 8}) {
    for (int order = 0; order < 2; ++order) {
      RunConfig v = c;
      v.threads = threads;
      if (order == 1) std::reverse(v.seeds.begin(), v.seeds.end());
      else std::rotate(v.seeds.begin(), v.seeds.begin() + 3, v.seeds.end());
      same = same && csv_of(v) == reference;
      ++variants;
    }
  }
  return {same, fmt("%d thread/seed-order variants vs reference: %s (%zu "
                    "trace bytes)",
                    variants, same ? "bit-identical" : "DIFFERENT",
                    reference.first.size())};
}

}  // namespace
}  // namespace aoa

int main() {
  using aoa::Outcome;
  int failures = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id,
                title, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  };
  auto guarded = [&](int id, const char* title,
                     const std::function<Outcome()>& fn) {
    try {
      report(id, title, fn());
    } catch (const std::exception& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  };

  std::map<std::string, aoa::BatchResult> low;
  guarded(1, "optimizer oracle equivalence", aoa::optimizer_equivalence);
  guarded(2, "sampler fidelity", aoa::sampler_fidelity);
  guarded(3, "confidence-bound coverage", aoa::ucb_coverage);
  guarded(4, "sublinear regret slope", aoa::regret_slope);
  guarded(5, "weak no-choice separation",
          [&] { return aoa::weak_no_choice_separation(low); });
  guarded(6, "theta0 monotonicity", [&] {
    if (low.size() != 3) return Outcome{false, "criterion 5 runs unavailable"};
    return aoa::theta0_monotonicity(low);
  });
  guarded(7, "top-k improvement", aoa::topk_improvement);
  guarded(8, "determinism and order independence", aoa::determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
