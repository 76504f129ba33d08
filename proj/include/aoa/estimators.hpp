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

// Rank-breaking pairwise statistics and the optimistic score estimates
// built on them.
//
// Before a pair has been compared its confidence bound is maximally
// optimistic: p_ucb = 1, so every odds transform of it returns the cap.
// The cap stands in for +infinity so that downstream optimizers see
// finite inputs; any capped item still dominates every uncapped one.

#ifndef AOA_ESTIMATORS_HPP_
#define AOA_ESTIMATORS_HPP_

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>

#include "aoa/pl_model.hpp"

namespace aoa {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// (K+1)×(K+1) pairwise win counts; row/column 0 is the no-choice option.
class WinMatrix {
 public:
  explicit WinMatrix(int num_items)
      : counts_(CountMatrix::Zero(num_items + 1, num_items + 1)) {}

  int num_items() const { return static_cast<int>(counts_.rows()) - 1; }
  std::int64_t wins(int i, int j) const { return counts_(i, j); }
  std::int64_t comparisons(int i, int j) const {
    return counts_(i, j) + counts_(j, i);
  }
  std::int64_t total() const { return counts_.sum(); }
  const CountMatrix& counts() const { return counts_; }

  void add_win(int winner, int loser) { ++counts_(winner, loser); }
  void clear() { counts_.setZero(); }

 private:
  CountMatrix counts_;
};

struct UcbParams {
  double x = 1.0;
  double theta_cap = 1e6;

  // x = 2 ln T.
  static UcbParams for_horizon(std::int64_t horizon, double theta_cap = 1e6);
};

// winner beats every other member of S ∪ {0}.
void rank_break_winner(WinMatrix& wm, const Assortment& s, int winner);

// Position l beats everything in S ∪ {0} not ranked at 1..l.
void rank_break_topk(WinMatrix& wm, const Assortment& s,
                     std::span<const int> ranking);

// w_ij / n_ij, or nullopt for a pair never compared. The diagonal is 1/2.
std::optional<double> p_hat(const WinMatrix& wm, int i, int j);

inline double p_ucb_from_counts(std::int64_t wins, std::int64_t n, double x) {
  if (n == 0) return 1.0;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(wins) / nn;
  return p + std::sqrt(2.0 * p * (1.0 - p) * x / nn) + 3.0 * x / nn;
}

// Not clipped to [0, 1].
double p_ucb(const WinMatrix& wm, int i, int j, const UcbParams& params);

// p / (1 - p)_+, capped; the cap also covers p >= 1.
inline double odds_ucb(double p, double theta_cap) {
  if (p >= 1.0) return theta_cap;
  const double odds = p / (1.0 - p);
  return odds < theta_cap ? odds : theta_cap;
}

double gamma_ucb(const WinMatrix& wm, int i, int j, const UcbParams& params);
double theta_ucb(const WinMatrix& wm, int i, const UcbParams& params);
double adaptive_theta_ucb(const WinMatrix& wm, int i, const UcbParams& params);

// Whole-vector forms used by the policies. Entry 0 is the no-choice pivot
// and equals 1.
Eigen::VectorXd theta_ucb_vector(const WinMatrix& wm, const UcbParams& params);
Eigen::MatrixXd gamma_ucb_matrix(const WinMatrix& wm, const UcbParams& params);
Eigen::VectorXd adaptive_theta_ucb_vector(const WinMatrix& wm,
                                          const UcbParams& params);

}  // namespace aoa

#endif  // AOA_ESTIMATORS_HPP_
