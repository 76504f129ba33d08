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

// Ground-truth Plackett-Luce choice model.
//
// Item vectors throughout the library are indexed by item: a model over K
// items uses Eigen vectors of length K + 1 whose entry 0 belongs to the
// no-choice option and entries 1..K to the items.

#ifndef AOA_PL_MODEL_HPP_
#define AOA_PL_MODEL_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "aoa/rng.hpp"

namespace aoa {

inline constexpr int kNoChoice = 0;

// A nonempty set of distinct items from 1..K, kept sorted.
class Assortment {
 public:
  Assortment() = default;
  explicit Assortment(std::vector<int> items);
  Assortment(std::initializer_list<int> items)
      : Assortment(std::vector<int>(items)) {}

  std::span<const int> items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  bool contains(int item) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const Assortment&) const = default;

 private:
  std::vector<int> items_;
};

std::string to_string(const Assortment& s);

struct Winner {
  int item = kNoChoice;
  bool operator==(const Winner&) const = default;
};

// Ordered top draws without replacement from S ∪ {0}.
struct Ranking {
  std::vector<int> items;
  bool operator==(const Ranking&) const = default;
};

using Feedback = std::variant<Winner, Ranking>;

enum class FeedbackKind { kWinner, kTopK };

struct FeedbackSpec {
  FeedbackKind kind = FeedbackKind::kWinner;
  int k = 1;

  static FeedbackSpec winner() { return {}; }
  static FeedbackSpec top_k(int k) { return {FeedbackKind::kTopK, k}; }
  bool operator==(const FeedbackSpec&) const = default;
};

class PLInstance {
 public:
  // theta and weights have one entry per item (length K, item i at i - 1).
  PLInstance(const Eigen::VectorXd& theta, double theta0,
             const Eigen::VectorXd& weights, int cap,
             FeedbackSpec feedback = FeedbackSpec::winner(),
             std::string name = {});

  int num_items() const { return static_cast<int>(scores_.size()) - 1; }
  int cap() const { return cap_; }
  double theta(int i) const { return scores_(i); }
  double theta0() const { return scores_(0); }
  double weight(int i) const { return weights_(i); }
  FeedbackSpec feedback() const { return feedback_; }
  const std::string& name() const { return name_; }

  // Length K + 1, entry 0 is theta0.
  const Eigen::VectorXd& scores() const { return scores_; }
  // Length K + 1, entry 0 is zero.
  const Eigen::VectorXd& weights() const { return weights_; }

  PLInstance with_theta0(double theta0) const;
  PLInstance with_cap(int cap) const;
  PLInstance with_weights(const Eigen::VectorXd& weights) const;
  PLInstance with_feedback(FeedbackSpec feedback) const;
  PLInstance with_name(std::string name) const;
  // Item i of the result is item perm[i - 1] of this instance.
  PLInstance relabeled(std::span<const int> perm) const;

  // Throws std::domain_error unless s is a legal offer (items in 1..K,
  // at most cap() of them).
  void check_offer(const Assortment& s) const;

 private:
  Eigen::VectorXd scores_;
  Eigen::VectorXd weights_;
  int cap_;
  FeedbackSpec feedback_;
  std::string name_;
};

/// Θ_S: total score of the items in s.
template <typename Derived>
typename Derived::Scalar total_score(const Eigen::MatrixBase<Derived>& scores,
                                     const Assortment& s) {
  typename Derived::Scalar sum(0);
  for (int i : s) sum += scores(i);
  return sum;
}

/// Probability that i ∈ S ∪ {0} is chosen from s; scores(0) is the
/// no-choice score.
template <typename Derived>
typename Derived::Scalar choice_prob(const Eigen::MatrixBase<Derived>& scores,
                                     const Assortment& s, int i) {
  if (i != kNoChoice && !s.contains(i)) {
    throw std::domain_error("choice_prob: item " + std::to_string(i) +
                            " is not offered");
  }
  return scores(i) / (scores(0) + total_score(scores, s));
}

/// Weighted choice utility Σ_{i∈S} r_i θ_i / (θ_0 + Θ_S). Summation runs
/// over s in increasing item order so equal sets give identical values.
template <typename DerivedS, typename DerivedW>
typename DerivedS::Scalar expected_revenue(
    const Eigen::MatrixBase<DerivedS>& scores,
    const Eigen::MatrixBase<DerivedW>& weights, const Assortment& s) {
  typename DerivedS::Scalar num(0);
  typename DerivedS::Scalar den = scores(0);
  for (int i : s) {
    num += weights(i) * scores(i);
    den += scores(i);
  }
  return num / den;
}

inline double choice_prob(const PLInstance& inst, const Assortment& s, int i) {
  inst.check_offer(s);
  return choice_prob(inst.scores(), s, i);
}

inline double expected_revenue(const PLInstance& inst, const Assortment& s) {
  return expected_revenue(inst.scores(), inst.weights(), s);
}

Winner sample_winner(const PLInstance& inst, const Assortment& s, Rng& rng);

// Sequential draws without replacement from S ∪ {0}; k ≤ |S| + 1.
Ranking sample_topk(const PLInstance& inst, const Assortment& s, int k,
                    Rng& rng);

// Draws feedback of the kind configured on the instance.
Feedback sample_feedback(const PLInstance& inst, const Assortment& s, Rng& rng);

// θ_i = top - (i - 1) gap. Weights are all one, theta0 = 1, cap = K.
PLInstance make_arith(int num_items, double top, double gap);

// θ_i = base everywhere except θ_spike_index = spike.
PLInstance make_bad(int num_items, double base, int spike_index, double spike);

}  // namespace aoa

#endif  // AOA_PL_MODEL_HPP_
