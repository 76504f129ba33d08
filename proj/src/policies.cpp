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

#include "aoa/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aoa/assortment_opt.hpp"
#include "aoa/harness.hpp"

namespace aoa {

std::string_view to_string(Objective objective) {
  return objective == Objective::kTopM ? "top" : "wtd";
}

// -- AoaRb --------------------------------------------------------------------

AoaRb::AoaRb(ProblemInfo info, Objective objective, UcbParams params)
    : info_(std::move(info)),
      objective_(objective),
      params_(params),
      wins_(info_.num_items) {}

std::string_view AoaRb::name() const {
  return objective_ == Objective::kTopM ? "aoa-rb-top" : "aoa-rb-wtd";
}

bool AoaRb::accepts(FeedbackSpec feedback) const {
  return feedback.kind == FeedbackKind::kWinner;
}

Eigen::VectorXd AoaRb::optimistic_scores() const {
  return theta_ucb_vector(wins_, params_);
}

Assortment AoaRb::choose(const Eigen::VectorXd& scores) const {
  if (objective_ == Objective::kTopM) return top_m_select(scores, info_.cap);
  return max_weighted_assortment(scores, info_.weights, info_.cap);
}

Assortment AoaRb::select(std::int64_t) { return choose(optimistic_scores()); }

void AoaRb::observe(const Assortment& s, const Feedback& fb) {
  const auto* winner = std::get_if<Winner>(&fb);
  if (winner == nullptr) {
    throw ContractError(std::string(name()) + " expects winner feedback");
  }
  rank_break_winner(wins_, s, winner->item);
}

void AoaRb::reset(std::uint64_t) { wins_.clear(); }

// -- AoaRbTopK ----------------------------------------------------------------

AoaRbTopK::AoaRbTopK(ProblemInfo info, Objective objective, UcbParams params,
                     int k)
    : AoaRb(std::move(info), objective, params), k_(k) {
  if (k < 1 || k > info_.cap) {
    throw std::invalid_argument("aoa-rb-k: k must lie in [1, m]");
  }
}

bool AoaRbTopK::accepts(FeedbackSpec feedback) const {
  return feedback.kind == FeedbackKind::kTopK && feedback.k == k_;
}

void AoaRbTopK::observe(const Assortment& s, const Feedback& fb) {
  const auto* ranking = std::get_if<Ranking>(&fb);
  if (ranking == nullptr) {
    throw ContractError("aoa-rb-k expects ranking feedback");
  }
  if (static_cast<int>(ranking->items.size()) > k_) {
    throw ContractError("aoa-rb-k: ranking of length " +
                        std::to_string(ranking->items.size()) +
                        " exceeds k=" + std::to_string(k_));
  }
  rank_break_topk(wins_, s, ranking->items);
}

// -- AdaptivePivot ------------------------------------------------------------

AdaptivePivot::AdaptivePivot(ProblemInfo info, UcbParams params)
    : AoaRb(std::move(info), Objective::kWeighted, params) {}

Eigen::VectorXd AdaptivePivot::optimistic_scores() const {
  return adaptive_theta_ucb_vector(wins_, params_);
}

// -- MnlUcb -------------------------------------------------------------------

MnlUcb::MnlUcb(ProblemInfo info, MnlUcbParams params)
    : info_(std::move(info)), params_(params) {
  reset(0);
}

bool MnlUcb::accepts(FeedbackSpec feedback) const {
  return feedback.kind == FeedbackKind::kWinner;
}

Assortment MnlUcb::select(std::int64_t) { return current_; }

void MnlUcb::observe(const Assortment& s, const Feedback& fb) {
  const auto* winner = std::get_if<Winner>(&fb);
  if (winner == nullptr) {
    throw ContractError("mnl-ucb expects winner feedback");
  }
  if (!(s == current_)) {
    throw ContractError("mnl-ucb: feedback for an assortment it did not offer");
  }
  if (winner->item == kNoChoice) {
    close_epoch();
  } else {
    picks_(winner->item) += 1;
  }
}

void MnlUcb::close_epoch() {
  for (int i : current_) {
    epoch_counts_(i) += 1;
    mean_picks_(i) += (picks_(i) - mean_picks_(i)) / epoch_counts_(i);
  }
  picks_.setZero();
  ++epoch_;

  const double log_term =
      std::log(std::sqrt(static_cast<double>(info_.num_items)) *
                   static_cast<double>(epoch_) +
               1.0);
  const double c = params_.bonus_constant * log_term;
  for (int i = 1; i <= info_.num_items; ++i) {
    const double n = epoch_counts_(i);
    if (n == 0) continue;
    const double v = mean_picks_(i);
    ucb_(i) = std::min(params_.theta_cap, v + std::sqrt(v * c / n) + c / n);
  }
  current_ = max_weighted_assortment(ucb_, info_.weights, info_.cap);
}

void MnlUcb::reset(std::uint64_t) {
  const int n = info_.num_items + 1;
  epoch_ = 0;
  picks_ = Eigen::VectorXd::Zero(n);
  mean_picks_ = Eigen::VectorXd::Zero(n);
  epoch_counts_ = Eigen::VectorXd::Zero(n);
  ucb_ = Eigen::VectorXd::Constant(n, params_.theta_cap);
  ucb_(0) = 1.0;
  current_ = max_weighted_assortment(ucb_, info_.weights, info_.cap);
}

// -- UniformPolicy ------------------------------------------------------------

UniformPolicy::UniformPolicy(ProblemInfo info)
    : info_(std::move(info)), deck_(info_.num_items) {
  reset(0);
}

Assortment UniformPolicy::select(std::int64_t) {
  std::iota(deck_.begin(), deck_.end(), 1);
  const auto k = static_cast<std::uint64_t>(deck_.size());
  for (int n = 0; n < info_.cap; ++n) {
    const auto pick = n + uniform_index(rng_, k - n);
    std::swap(deck_[n], deck_[pick]);
  }
  return Assortment(std::vector<int>(deck_.begin(), deck_.begin() + info_.cap));
}

void UniformPolicy::reset(std::uint64_t seed) { rng_.seed(seed); }

// -- Factory ------------------------------------------------------------------

bool is_policy_name(std::string_view name) {
  return std::find(std::begin(kPolicyNames), std::end(kPolicyNames), name) !=
         std::end(kPolicyNames);
}

std::string policy_names_joined() {
  std::string out;
  for (auto n : kPolicyNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const PLInstance& inst,
                                    std::int64_t horizon) {
  UcbParams params = UcbParams::for_horizon(std::max<std::int64_t>(horizon, 2),
                                            spec.theta_cap);
  if (spec.x) {
    if (!(*spec.x > 0)) throw ConfigError("policy parameter x must be > 0");
    params.x = *spec.x;
  }
  ProblemInfo info = ProblemInfo::of(inst);
  const std::string& n = spec.name;
  if (n == "aoa-rb-top") {
    return std::make_unique<AoaRb>(info, Objective::kTopM, params);
  }
  if (n == "aoa-rb-wtd") {
    return std::make_unique<AoaRb>(info, Objective::kWeighted, params);
  }
  if (n == "aoa-rb-k") {
    if (inst.feedback().kind != FeedbackKind::kTopK) {
      throw ConfigError("aoa-rb-k needs top-k feedback on the instance");
    }
    return std::make_unique<AoaRbTopK>(info, spec.objective, params,
                                       inst.feedback().k);
  }
  if (n == "adpivot") return std::make_unique<AdaptivePivot>(info, params);
  if (n == "mnl-ucb") {
    return std::make_unique<MnlUcb>(
        info, MnlUcbParams{spec.mnl_constant, spec.theta_cap});
  }
  if (n == "oracle") {
    return std::make_unique<FixedPolicy>(
        compute_sstar(inst, spec.objective).set, "oracle");
  }
  if (n == "uniform") return std::make_unique<UniformPolicy>(info);
  throw ConfigError("unknown policy '" + n + "'; valid names: " +
                    policy_names_joined());
}

}  // namespace aoa
