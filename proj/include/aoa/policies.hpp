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

// Online assortment policies behind one select/observe/reset contract.
//
// Learners only see what the learner is entitled to: K, the cap m and the
// weights r. Their score estimates are relative to the no-choice option,
// so they optimize with a no-choice score of 1.

#ifndef AOA_POLICIES_HPP_
#define AOA_POLICIES_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aoa/estimators.hpp"
#include "aoa/pl_model.hpp"

namespace aoa {

enum class Objective { kTopM, kWeighted };

std::string_view to_string(Objective objective);

// Thrown when a policy receives feedback it was not built for.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// What a learner may know about the problem.
struct ProblemInfo {
  int num_items = 0;
  int cap = 0;
  Eigen::VectorXd weights;  // length K + 1, entry 0 unused

  static ProblemInfo of(const PLInstance& inst) {
    return {inst.num_items(), inst.cap(), inst.weights()};
  }
};

class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  virtual bool accepts(FeedbackSpec feedback) const = 0;

  // Assortment to offer at round t (1-based).
  virtual Assortment select(std::int64_t t) = 0;
  virtual void observe(const Assortment& s, const Feedback& fb) = 0;
  // Clears all learned state; randomized policies reseed from `seed`.
  virtual void reset(std::uint64_t seed) = 0;
};

// Optimistic rank-breaking policy with the no-choice option as the pivot.
// Scores are θ_i^ucb = γ_i0^ucb; each round plays the Top-m set or the
// weighted-utility maximizer of those scores.
class AoaRb : public Policy {
 public:
  AoaRb(ProblemInfo info, Objective objective, UcbParams params);

  std::string_view name() const override;
  bool accepts(FeedbackSpec feedback) const override;
  Assortment select(std::int64_t t) override;
  void observe(const Assortment& s, const Feedback& fb) override;
  void reset(std::uint64_t seed) override;

  const WinMatrix& wins() const { return wins_; }
  const UcbParams& params() const { return params_; }
  Objective objective() const { return objective_; }

  // Optimistic score vector for the current state (entry 0 is 1).
  virtual Eigen::VectorXd optimistic_scores() const;

 protected:
  Assortment choose(const Eigen::VectorXd& scores) const;

  ProblemInfo info_;
  Objective objective_;
  UcbParams params_;
  WinMatrix wins_;
};

// Same selection rule; learns from top-k rankings.
class AoaRbTopK : public AoaRb {
 public:
  AoaRbTopK(ProblemInfo info, Objective objective, UcbParams params, int k);

  std::string_view name() const override { return "aoa-rb-k"; }
  bool accepts(FeedbackSpec feedback) const override;
  void observe(const Assortment& s, const Feedback& fb) override;

  int k() const { return k_; }

 private:
  int k_;
};

// Scores θ̂_i = min_j γ_ij^ucb γ_j0^ucb over every pivot j; weighted
// objective.
class AdaptivePivot : public AoaRb {
 public:
  AdaptivePivot(ProblemInfo info, UcbParams params);

  std::string_view name() const override { return "adpivot"; }
  Eigen::VectorXd optimistic_scores() const override;
};

struct MnlUcbParams {
  double bonus_constant = 48.0;
  double theta_cap = 1e6;
};

// Epoch-based MNL-Bandit baseline. An epoch repeats one assortment until
// the no-choice option is picked; the per-epoch pick count of item i is an
// unbiased estimate of θ_i / θ_0. Between epochs
//   v_i^ucb = v̄_i + sqrt(v̄_i c ln(√K ℓ + 1) / T_i) + c ln(√K ℓ + 1) / T_i
// with c = bonus_constant, ℓ the number of finished epochs and T_i the
// number of epochs that offered i. Items never offered sit at the cap.
class MnlUcb : public Policy {
 public:
  MnlUcb(ProblemInfo info, MnlUcbParams params);

  std::string_view name() const override { return "mnl-ucb"; }
  bool accepts(FeedbackSpec feedback) const override;
  Assortment select(std::int64_t t) override;
  void observe(const Assortment& s, const Feedback& fb) override;
  void reset(std::uint64_t seed) override;

  std::int64_t epochs() const { return epoch_; }
  const Eigen::VectorXd& mean_picks() const { return mean_picks_; }
  const Eigen::VectorXd& epoch_counts() const { return epoch_counts_; }
  const Eigen::VectorXd& ucb() const { return ucb_; }

 private:
  void close_epoch();

  ProblemInfo info_;
  MnlUcbParams params_;
  std::int64_t epoch_ = 0;
  Assortment current_;
  Eigen::VectorXd picks_;         // within the running epoch
  Eigen::VectorXd mean_picks_;    // v̄_i
  Eigen::VectorXd epoch_counts_;  // T_i
  Eigen::VectorXd ucb_;           // entry 0 is 1
};

// Plays a fixed assortment; with the ground-truth optimum it is the
// zero-regret anchor.
class FixedPolicy : public Policy {
 public:
  FixedPolicy(Assortment s, std::string name)
      : set_(std::move(s)), name_(std::move(name)) {}

  std::string_view name() const override { return name_; }
  bool accepts(FeedbackSpec) const override { return true; }
  Assortment select(std::int64_t) override { return set_; }
  void observe(const Assortment&, const Feedback&) override {}
  void reset(std::uint64_t) override {}

 private:
  Assortment set_;
  std::string name_;
};

// Uniformly random size-m subset each round.
class UniformPolicy : public Policy {
 public:
  explicit UniformPolicy(ProblemInfo info);

  std::string_view name() const override { return "uniform"; }
  bool accepts(FeedbackSpec) const override { return true; }
  Assortment select(std::int64_t t) override;
  void observe(const Assortment&, const Feedback&) override {}
  void reset(std::uint64_t seed) override;

 private:
  ProblemInfo info_;
  Rng rng_;
  std::vector<int> deck_;
};

inline constexpr std::string_view kPolicyNames[] = {
    "aoa-rb-top", "aoa-rb-wtd", "aoa-rb-k", "adpivot",
    "mnl-ucb",    "oracle",     "uniform"};

bool is_policy_name(std::string_view name);
std::string policy_names_joined();

struct PolicySpec {
  std::string name;
  // Unset: 2 ln T for the episode horizon.
  std::optional<double> x;
  double theta_cap = 1e6;
  // Used by aoa-rb-k and oracle; the others fix their own objective.
  Objective objective = Objective::kWeighted;
  double mnl_constant = 48.0;

  bool operator==(const PolicySpec&) const = default;
};

// The instance is only read for public information, except by "oracle".
std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const PLInstance& inst,
                                    std::int64_t horizon);

}  // namespace aoa

#endif  // AOA_POLICIES_HPP_
