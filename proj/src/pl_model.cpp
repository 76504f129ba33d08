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

#include "aoa/pl_model.hpp"

#include <algorithm>
#include <sstream>

namespace aoa {

Assortment::Assortment(std::vector<int> items) : items_(std::move(items)) {
  if (items_.empty()) throw std::domain_error("assortment must be nonempty");
  std::sort(items_.begin(), items_.end());
  if (items_.front() < 1) {
    throw std::domain_error("assortment items are numbered from 1");
  }
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw std::domain_error("assortment contains a duplicate item");
  }
}

bool Assortment::contains(int item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

std::string to_string(const Assortment& s) {
  std::ostringstream os;
  os << '{';
  for (int n = 0; n < s.size(); ++n) os << (n ? "," : "") << s.items()[n];
  os << '}';
  return os.str();
}

PLInstance::PLInstance(const Eigen::VectorXd& theta, double theta0,
                       const Eigen::VectorXd& weights, int cap,
                       FeedbackSpec feedback, std::string name)
    : scores_(theta.size() + 1),
      weights_(theta.size() + 1),
      cap_(cap),
      feedback_(feedback),
      name_(std::move(name)) {
  const int k = static_cast<int>(theta.size());
  if (k < 1) throw std::invalid_argument("instance needs at least one item");
  if (weights.size() != theta.size()) {
    throw std::invalid_argument("weights and theta differ in length");
  }
  if (!(theta0 > 0)) throw std::invalid_argument("theta0 must be positive");
  for (int i = 0; i < k; ++i) {
    if (!(theta(i) > 0)) {
      throw std::invalid_argument("theta_" + std::to_string(i + 1) +
                                  " must be positive");
    }
    if (!(weights(i) >= 0 && weights(i) <= 1)) {
      throw std::invalid_argument("weight r_" + std::to_string(i + 1) +
                                  " must lie in [0, 1]");
    }
  }
  if (cap < 1 || cap > k) {
    throw std::invalid_argument("assortment cap must lie in [1, K]");
  }
  if (feedback.kind == FeedbackKind::kTopK &&
      (feedback.k < 1 || feedback.k > cap)) {
    throw std::invalid_argument("top-k feedback needs 1 <= k <= m");
  }
  scores_(0) = theta0;
  scores_.tail(k) = theta;
  weights_(0) = 0;
  weights_.tail(k) = weights;
}

PLInstance PLInstance::with_theta0(double theta0) const {
  return {scores_.tail(num_items()), theta0, weights_.tail(num_items()), cap_,
          feedback_, name_};
}

PLInstance PLInstance::with_cap(int cap) const {
  return {scores_.tail(num_items()), theta0(), weights_.tail(num_items()), cap,
          feedback_, name_};
}

PLInstance PLInstance::with_weights(const Eigen::VectorXd& weights) const {
  return {scores_.tail(num_items()), theta0(), weights, cap_, feedback_, name_};
}

PLInstance PLInstance::with_feedback(FeedbackSpec feedback) const {
  return {scores_.tail(num_items()), theta0(), weights_.tail(num_items()), cap_,
          feedback, name_};
}

PLInstance PLInstance::with_name(std::string name) const {
  return {scores_.tail(num_items()), theta0(), weights_.tail(num_items()), cap_,
          feedback_, std::move(name)};
}

PLInstance PLInstance::relabeled(std::span<const int> perm) const {
  const int k = num_items();
  if (static_cast<int>(perm.size()) != k) {
    throw std::invalid_argument("relabeling must cover every item");
  }
  Eigen::VectorXd theta(k), weights(k);
  std::vector<char> seen(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    const int src = perm[i];
    if (src < 1 || src > k || seen[src]) {
      throw std::invalid_argument("relabeling is not a permutation of 1..K");
    }
    seen[src] = 1;
    theta(i) = scores_(src);
    weights(i) = weights_(src);
  }
  return {theta, theta0(), weights, cap_, feedback_, name_};
}

void PLInstance::check_offer(const Assortment& s) const {
  if (s.empty()) throw std::domain_error("empty assortment offered");
  if (s.items().back() > num_items()) {
    throw std::domain_error("assortment item out of range");
  }
  if (s.size() > cap_) {
    throw std::domain_error("assortment " + to_string(s) + " exceeds cap " +
                            std::to_string(cap_));
  }
}

Winner sample_winner(const PLInstance& inst, const Assortment& s, Rng& rng) {
  const auto& scores = inst.scores();
  // Accumulated in the same order as sample_topk so that a top-1 draw and a
  // winner draw from one engine state coincide exactly.
  double mass = scores(0);
  for (int i : s) mass += scores(i);
  double u = uniform01(rng) * mass;
  u -= scores(0);
  if (u < 0) return {kNoChoice};
  for (int i : s) {
    u -= scores(i);
    if (u < 0) return {i};
  }
  // Rounding left u marginally nonnegative; the last item absorbs it.
  return {s.items().back()};
}

Ranking sample_topk(const PLInstance& inst, const Assortment& s, int k,
                    Rng& rng) {
  if (k < 1 || k > s.size() + 1) {
    throw std::domain_error("sample_topk: k must lie in [1, |S| + 1]");
  }
  const auto& scores = inst.scores();
  std::vector<int> pool;
  pool.reserve(s.size() + 1);
  pool.push_back(kNoChoice);
  pool.insert(pool.end(), s.begin(), s.end());

  Ranking out;
  out.items.reserve(k);
  for (int draw = 0; draw < k; ++draw) {
    double mass = scores(pool[0]);
    for (std::size_t n = 1; n < pool.size(); ++n) mass += scores(pool[n]);
    double u = uniform01(rng) * mass;
    std::size_t pick = pool.size() - 1;
    for (std::size_t n = 0; n < pool.size(); ++n) {
      u -= scores(pool[n]);
      if (u < 0) {
        pick = n;
        break;
      }
    }
    out.items.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

Feedback sample_feedback(const PLInstance& inst, const Assortment& s,
                         Rng& rng) {
  const FeedbackSpec fb = inst.feedback();
  if (fb.kind == FeedbackKind::kWinner) return sample_winner(inst, s, rng);
  return sample_topk(inst, s, std::min(fb.k, s.size() + 1), rng);
}

PLInstance make_arith(int num_items, double top, double gap) {
  if (num_items < 1) throw std::invalid_argument("make_arith: K must be >= 1");
  Eigen::VectorXd theta(num_items);
  for (int i = 0; i < num_items; ++i) {
    theta(i) = top - i * gap;
    if (!(theta(i) > 0)) {
      throw std::invalid_argument(
          "make_arith: theta_" + std::to_string(i + 1) + " = " +
          std::to_string(theta(i)) + " is not positive; reduce the gap");
    }
  }
  return {theta, 1.0, Eigen::VectorXd::Ones(num_items), num_items,
          FeedbackSpec::winner(), "arith" + std::to_string(num_items)};
}

PLInstance make_bad(int num_items, double base, int spike_index,
                    double spike) {
  if (num_items < 1) throw std::invalid_argument("make_bad: K must be >= 1");
  if (spike_index < 1 || spike_index > num_items) {
    throw std::invalid_argument("make_bad: spike index out of range");
  }
  if (!(base > 0) || !(spike > 0)) {
    throw std::invalid_argument("make_bad: scores must be positive");
  }
  Eigen::VectorXd theta = Eigen::VectorXd::Constant(num_items, base);
  theta(spike_index - 1) = spike;
  return {theta, 1.0, Eigen::VectorXd::Ones(num_items), num_items,
          FeedbackSpec::winner(), "bad" + std::to_string(num_items)};
}

}  // namespace aoa
