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

#include "aoa/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "test_oracles.hpp"

namespace aoa {
namespace {

namespace oracle = testing_oracles;

PLInstance worked_instance() {
  Eigen::VectorXd theta(3), r(3);
  theta << 2, 1, 0.5;
  r << 0.2, 0.5, 1.0;
  return {theta, 1.0, r, 2, FeedbackSpec::winner(), "worked"};
}

BatchConfig small_batch(const std::string& policy, int seeds) {
  BatchConfig c{make_arith(8, 1.0, 0.1).with_cap(3), PolicySpec{policy}};
  c.horizon = 600;
  for (int s = 1; s <= seeds; ++s) c.seeds.push_back(s);
  return c;
}

// Plays back a recorded selection log and ignores feedback.
class Replay : public Policy {
 public:
  explicit Replay(std::vector<Assortment> log) : log_(std::move(log)) {}
  std::string_view name() const override { return "replay"; }
  bool accepts(FeedbackSpec) const override { return true; }
  Assortment select(std::int64_t t) override { return log_[t - 1]; }
  void observe(const Assortment&, const Feedback&) override {}
  void reset(std::uint64_t) override {}

 private:
  std::vector<Assortment> log_;
};

TEST(SStar, TopM) {
  const auto inst = make_arith(5, 1.0, 0.1).with_cap(2);
  const auto best = compute_sstar(inst, Objective::kTopM);
  EXPECT_EQ(best.set, Assortment({1, 2}));
  EXPECT_DOUBLE_EQ(best.value, 1.9);
}

TEST(SStar, Weighted) {
  const auto best = compute_sstar(worked_instance(), Objective::kWeighted);
  EXPECT_EQ(best.set, Assortment({2, 3}));
  EXPECT_NEAR(best.value, 0.4, 1e-15);
}

TEST(SStar, LargeInstanceUsesLevelSearch) {
  Rng rng(4);
  Eigen::VectorXd theta(16), r(16);
  for (int i = 0; i < 16; ++i) {
    theta(i) = 0.1 + uniform01(rng);
    r(i) = uniform01(rng);
  }
  const PLInstance inst(theta, 0.7, r, 5);
  const auto best = compute_sstar(inst, Objective::kWeighted);
  EXPECT_NEAR(best.value,
              oracle::best_revenue_by_bitmask(inst.scores(), inst.weights(), 5),
              1e-12);
}

TEST(Checkpoints, Geometric) {
  const auto cps = geometric_checkpoints(10000);
  ASSERT_FALSE(cps.empty());
  EXPECT_EQ(cps.front(), 1);
  EXPECT_EQ(cps.back(), 10000);
  EXPECT_TRUE(std::is_sorted(cps.begin(), cps.end()));
  EXPECT_EQ(std::adjacent_find(cps.begin(), cps.end()), cps.end());
  EXPECT_LE(cps.size(), 100u);
  EXPECT_EQ(make_checkpoints(CheckpointKind::kFull, 7).size(), 7u);
}

TEST(Episode, OracleHasZeroRegret) {
  for (Objective obj : {Objective::kTopM, Objective::kWeighted}) {
    const auto inst = worked_instance();
    FixedPolicy p(compute_sstar(inst, obj).set, "oracle");
    const auto cps = make_checkpoints(CheckpointKind::kFull, 500);
    const auto trace = run_episode(inst, p, 500, 3, cps);
    const double regret =
        obj == Objective::kTopM ? trace.points.back().reg_top
                                : trace.points.back().reg_wtd;
    EXPECT_EQ(regret, 0.0);
  }
}

TEST(Episode, RegretIsNondecreasing) {
  for (const char* name : {"aoa-rb-top", "aoa-rb-wtd", "adpivot", "mnl-ucb",
                           "uniform"}) {
    const auto inst = make_arith(8, 1.0, 0.1).with_cap(3).with_theta0(0.5);
    const auto p = make_policy(PolicySpec{name}, inst, 1000);
    const auto cps = make_checkpoints(CheckpointKind::kFull, 1000);
    const auto trace = run_episode(inst, *p, 1000, 9, cps);
    for (std::size_t n = 1; n < trace.points.size(); ++n) {
      ASSERT_GE(trace.points[n].reg_top - trace.points[n - 1].reg_top, -1e-12)
          << name;
      ASSERT_GE(trace.points[n].reg_wtd - trace.points[n - 1].reg_wtd, -1e-12)
          << name;
    }
  }
}

TEST(Episode, RegretIncrementsMatchDefinition) {
  const auto inst = make_arith(6, 1.0, 0.1).with_cap(2).with_theta0(0.4);
  const auto p = make_policy(PolicySpec{"uniform"}, inst, 300);
  const auto top = compute_sstar(inst, Objective::kTopM);
  const auto wtd = compute_sstar(inst, Objective::kWeighted);
  double reg_top = 0;
  double reg_wtd = 0;
  std::vector<double> expected_top, expected_wtd;
  const auto cps = make_checkpoints(CheckpointKind::kFull, 300);
  const auto trace = run_episode(
      inst, *p, 300, 2, cps,
      [&](std::int64_t, const Assortment& s, const Feedback&) {
        const std::vector<int> items(s.begin(), s.end());
        double theta_s = 0;
        for (int i : items) theta_s += inst.theta(i);
        reg_top += (top.value - theta_s) / 2;
        reg_wtd += wtd.value -
                   oracle::revenue(inst.scores(), inst.weights(), items);
        expected_top.push_back(reg_top);
        expected_wtd.push_back(reg_wtd);
      });
  for (std::size_t n = 0; n < trace.points.size(); ++n) {
    EXPECT_NEAR(trace.points[n].reg_top, expected_top[n], 1e-9);
    EXPECT_NEAR(trace.points[n].reg_wtd, expected_wtd[n], 1e-9);
  }
}

TEST(Episode, RegretDependsOnlyOnSelections) {
  const auto inst = make_arith(8, 1.0, 0.1).with_cap(3);
  const auto learner = make_policy(PolicySpec{"aoa-rb-wtd"}, inst, 800);
  std::vector<Assortment> log;
  const auto cps = make_checkpoints(CheckpointKind::kFull, 800);
  const auto original = run_episode(
      inst, *learner, 800, 1,
      cps, [&](std::int64_t, const Assortment& s, const Feedback&) {
        log.push_back(s);
      });
  Replay replay(log);
  // A different seed draws different feedback for the same selections.
  const auto replayed = run_episode(inst, replay, 800, 99, cps);
  EXPECT_EQ(original.points, replayed.points);
}

TEST(Episode, Deterministic) {
  const auto inst = make_arith(8, 1.0, 0.1).with_cap(3);
  const auto cps = geometric_checkpoints(1000);
  const auto a = make_policy(PolicySpec{"mnl-ucb"}, inst, 1000);
  const auto b = make_policy(PolicySpec{"mnl-ucb"}, inst, 1000);
  EXPECT_EQ(run_episode(inst, *a, 1000, 4, cps).points,
            run_episode(inst, *b, 1000, 4, cps).points);
}

TEST(Episode, RejectsMismatchedFeedback) {
  const auto inst = make_arith(8, 1.0, 0.1).with_cap(3);
  const auto p = make_policy(PolicySpec{"aoa-rb-wtd"}, inst, 10);
  const auto cps = make_checkpoints(CheckpointKind::kFull, 10);
  EXPECT_THROW(run_episode(inst.with_feedback(FeedbackSpec::top_k(2)), *p, 10,
                           1, cps),
               ConfigError);
  const std::vector<std::int64_t> bad{3, 2};
  EXPECT_THROW(run_episode(inst, *p, 10, 1, bad), ConfigError);
}

TEST(Batch, SingleSeedHasZeroSpread) {
  const auto r = run_batch(small_batch("aoa-rb-wtd", 1));
  EXPECT_TRUE((r.std_top.array() == 0).all());
  EXPECT_TRUE((r.std_wtd.array() == 0).all());
}

TEST(Batch, StatisticsMatchDirectComputation) {
  const auto r = run_batch(small_batch("uniform", 5));
  ASSERT_EQ(r.traces.size(), 5u);
  for (std::size_t n = 0; n < r.t.size(); ++n) {
    double sum = 0;
    for (const auto& tr : r.traces) sum += tr.points[n].reg_wtd;
    const double mean = sum / 5;
    double ss = 0;
    for (const auto& tr : r.traces) {
      ss += (tr.points[n].reg_wtd - mean) * (tr.points[n].reg_wtd - mean);
    }
    EXPECT_NEAR(r.mean_wtd(n), mean, 1e-12 * std::max(1.0, mean));
    EXPECT_NEAR(r.std_wtd(n), std::sqrt(ss / 4), 1e-9);
  }
}

TEST(Batch, InvariantToSeedOrderAndThreads) {
  auto base = small_batch("adpivot", 6);
  base.permute_items = true;
  const auto a = run_batch(base);
  auto shuffled = base;
  std::reverse(shuffled.seeds.begin(), shuffled.seeds.end());
  shuffled.threads = 4;
  const auto b = run_batch(shuffled);
  EXPECT_EQ(a.fingerprint, b.fingerprint);
  EXPECT_EQ(a.mean_wtd, b.mean_wtd);
  EXPECT_EQ(a.std_top, b.std_top);
  EXPECT_EQ(a.traces, b.traces);
}

TEST(Batch, RejectsDuplicateSeeds) {
  auto c = small_batch("uniform", 2);
  c.seeds.push_back(1);
  EXPECT_THROW(run_batch(c), ConfigError);
}

TEST(Batch, PermutationKeepsOptimumValue) {
  auto c = small_batch("uniform", 3);
  c.permute_items = true;
  const auto base = compute_sstar(c.instance, Objective::kWeighted).value;
  for (std::uint64_t seed : c.seeds) {
    const auto inst = episode_instance(c, seed);
    EXPECT_NEAR(compute_sstar(inst, Objective::kWeighted).value, base, 1e-15);
  }
}

TEST(Batch, UniformRegretIsLinearAndConcentrated) {
  BatchConfig c{make_arith(10, 1.0, 0.08).with_cap(3), PolicySpec{"uniform"}};
  c.horizon = 5000;
  for (int s = 1; s <= 20; ++s) c.seeds.push_back(s);
  const auto r = run_batch(c);
  EXPECT_LT(r.final_std_wtd() / r.final_mean_wtd(), 0.2);
  // Least-squares fit of the mean curve against t.
  const auto n = static_cast<double>(r.t.size());
  double st = 0, sy = 0, stt = 0, sty = 0, syy = 0;
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    const double t = static_cast<double>(r.t[i]);
    const double y = r.mean_wtd(i);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    syy += y * y;
  }
  const double cov = sty - st * sy / n;
  const double r2 = cov * cov / ((stt - st * st / n) * (syy - sy * sy / n));
  EXPECT_GE(r2, 0.99);
}

TEST(PairwiseSum, MatchesLongDouble) {
  std::vector<double> v(100001);
  Rng rng(6);
  long double exact = 0;
  for (auto& x : v) {
    x = uniform01(rng) * 1e3;
    exact += x;
  }
  EXPECT_NEAR(pairwise_sum(v), static_cast<double>(exact), 1e-6);
  EXPECT_EQ(pairwise_sum(std::span<const double>{}), 0.0);
}

}  // namespace
}  // namespace aoa
