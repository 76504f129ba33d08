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

// Static assortment optimization over item-indexed score vectors (entry 0
// is the no-choice score, see pl_model.hpp). Ties break toward smaller
// item indices.

#ifndef AOA_ASSORTMENT_OPT_HPP_
#define AOA_ASSORTMENT_OPT_HPP_

#include <Eigen/Core>

#include <utility>

#include "aoa/pl_model.hpp"

namespace aoa {

inline constexpr double kDefaultLambdaTolerance = 1e-10;
inline constexpr int kBruteForceMaxItems = 20;

using ScoreRef = Eigen::Ref<const Eigen::VectorXd>;

// The m items with the largest scores. Entry 0 is ignored.
Assortment top_m_select(const ScoreRef& scores, int m);

// argmax over |S| ≤ m of the weighted choice utility, by bisection on the
// revenue level λ: some S beats λ iff the m largest positive values of
// θ_i (r_i - λ) sum to more than λ θ_0. The result is within `tolerance`
// of the optimum. tolerance = 0 bisects down to adjacent doubles.
Assortment max_weighted_assortment(const ScoreRef& scores,
                                   const ScoreRef& weights, int m,
                                   double tolerance = kDefaultLambdaTolerance);

// Exhaustive search over all nonempty subsets of size ≤ m; first maximum in
// lexicographic subset order wins. Refuses K > 20.
std::pair<Assortment, double> brute_force_assortment(const ScoreRef& scores,
                                                     const ScoreRef& weights,
                                                     int m);

}  // namespace aoa

#endif  // AOA_ASSORTMENT_OPT_HPP_
