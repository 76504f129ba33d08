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

#include "aoa/estimators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace aoa {

UcbParams UcbParams::for_horizon(std::int64_t horizon, double theta_cap) {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  return {2.0 * std::log(static_cast<double>(horizon)), theta_cap};
}

namespace {

void check_item(const WinMatrix& wm, int i) {
  if (i < 0 || i > wm.num_items()) {
    throw std::domain_error("item " + std::to_string(i) + " out of range");
  }
}

}  // namespace

void rank_break_winner(WinMatrix& wm, const Assortment& s, int winner) {
  check_item(wm, winner);
  if (!s.empty() && s.items().back() > wm.num_items()) {
    throw std::domain_error("rank_break_winner: assortment out of range");
  }
  if (winner != kNoChoice && !s.contains(winner)) {
    throw std::domain_error("rank_break_winner: winner " +
                            std::to_string(winner) + " not in S ∪ {0}");
  }
  if (winner != kNoChoice) wm.add_win(winner, kNoChoice);
  for (int j : s) {
    if (j != winner) wm.add_win(winner, j);
  }
}

void rank_break_topk(WinMatrix& wm, const Assortment& s,
                     std::span<const int> ranking) {
  if (!s.empty() && s.items().back() > wm.num_items()) {
    throw std::domain_error("rank_break_topk: assortment out of range");
  }
  // Validate everything before touching the counts.
  std::vector<char> ranked(wm.num_items() + 1, 0);
  for (int i : ranking) {
    check_item(wm, i);
    if (i != kNoChoice && !s.contains(i)) {
      throw std::domain_error("rank_break_topk: item " + std::to_string(i) +
                              " not in S ∪ {0}");
    }
    if (ranked[i]) {
      throw std::domain_error("rank_break_topk: duplicate item " +
                              std::to_string(i));
    }
    ranked[i] = 1;
  }
  std::fill(ranked.begin(), ranked.end(), 0);
  for (int winner : ranking) {
    ranked[winner] = 1;
    if (!ranked[kNoChoice]) wm.add_win(winner, kNoChoice);
    for (int j : s) {
      if (!ranked[j]) wm.add_win(winner, j);
    }
  }
}

std::optional<double> p_hat(const WinMatrix& wm, int i, int j) {
  if (i == j) return 0.5;
  const std::int64_t n = wm.comparisons(i, j);
  if (n == 0) return std::nullopt;
  return static_cast<double>(wm.wins(i, j)) / static_cast<double>(n);
}

double p_ucb(const WinMatrix& wm, int i, int j, const UcbParams& params) {
  if (i == j) return 0.5;
  return p_ucb_from_counts(wm.wins(i, j), wm.comparisons(i, j), params.x);
}

double gamma_ucb(const WinMatrix& wm, int i, int j, const UcbParams& params) {
  if (i == j) return 1.0;
  return odds_ucb(p_ucb(wm, i, j, params), params.theta_cap);
}

double theta_ucb(const WinMatrix& wm, int i, const UcbParams& params) {
  return gamma_ucb(wm, i, kNoChoice, params);
}

double adaptive_theta_ucb(const WinMatrix& wm, int i,
                          const UcbParams& params) {
  double best = params.theta_cap;
  for (int j = 0; j <= wm.num_items(); ++j) {
    const double v = std::min(
        params.theta_cap,
        gamma_ucb(wm, i, j, params) * gamma_ucb(wm, j, kNoChoice, params));
    best = std::min(best, v);
  }
  return best;
}

Eigen::VectorXd theta_ucb_vector(const WinMatrix& wm,
                                 const UcbParams& params) {
  const int k = wm.num_items();
  Eigen::VectorXd out(k + 1);
  out(0) = 1.0;
  for (int i = 1; i <= k; ++i) out(i) = theta_ucb(wm, i, params);
  return out;
}

Eigen::MatrixXd gamma_ucb_matrix(const WinMatrix& wm,
                                 const UcbParams& params) {
  const int n = wm.num_items() + 1;
  const CountMatrix& w = wm.counts();
  Eigen::MatrixXd g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      g(i, j) = i == j ? 1.0
                       : odds_ucb(p_ucb_from_counts(w(i, j), w(i, j) + w(j, i),
                                                    params.x),
                                  params.theta_cap);
    }
  }
  return g;
}

Eigen::VectorXd adaptive_theta_ucb_vector(const WinMatrix& wm,
                                          const UcbParams& params) {
  const Eigen::MatrixXd g = gamma_ucb_matrix(wm, params);
  const Eigen::VectorXd pivot = g.col(kNoChoice);
  // min_j min(cap, γ_ij γ_j0), row by row.
  Eigen::VectorXd out =
      (g * pivot.asDiagonal()).rowwise().minCoeff().cwiseMin(params.theta_cap);
  out(0) = 1.0;
  return out;
}

}  // namespace aoa
