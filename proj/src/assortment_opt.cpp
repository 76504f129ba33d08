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

#include "aoa/assortment_opt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace aoa {
namespace {

struct Entry {
  double value;
  int item;
};

// Larger value first, smaller index on ties.
bool before(const Entry& a, const Entry& b) {
  return a.value > b.value || (a.value == b.value && a.item < b.item);
}

int item_count(const ScoreRef& scores, int m) {
  const int k = static_cast<int>(scores.size()) - 1;
  if (k < 1) throw std::invalid_argument("score vector has no items");
  if (m < 1 || m > k) {
    throw std::invalid_argument("cap m=" + std::to_string(m) +
                                " outside [1, K=" + std::to_string(k) + "]");
  }
  return k;
}

// Keeps the m best entries of `entries` (in any order) and returns them
// as an item list.
std::vector<int> keep_best(std::vector<Entry>& entries, int m) {
  if (static_cast<int>(entries.size()) > m) {
    std::nth_element(entries.begin(), entries.begin() + (m - 1), entries.end(),
                     before);
    entries.resize(m);
  }
  std::vector<int> items;
  items.reserve(entries.size());
  for (const Entry& e : entries) items.push_back(e.item);
  return items;
}

class LevelSearch {
 public:
  LevelSearch(const ScoreRef& scores, const ScoreRef& weights, int m)
      : scores_(scores), weights_(weights), m_(m) {
    entries_.reserve(scores.size());
  }

  // max over |S| ≤ m of Σ_{i∈S} θ_i (r_i - λ); fills best_ with the set.
  double surplus(double lambda) {
    entries_.clear();
    for (int i = 1; i < scores_.size(); ++i) {
      const double v = scores_(i) * (weights_(i) - lambda);
      if (v > 0) entries_.push_back({v, i});
    }
    if (static_cast<int>(entries_.size()) > m_) {
      std::nth_element(entries_.begin(), entries_.begin() + (m_ - 1),
                       entries_.end(), before);
      entries_.resize(m_);
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.item < b.item; });
    double sum = 0;
    for (const Entry& e : entries_) sum += e.value;
    return sum;
  }

  std::vector<int> last_set() const {
    std::vector<int> items;
    items.reserve(entries_.size());
    for (const Entry& e : entries_) items.push_back(e.item);
    return items;
  }

 private:
  const ScoreRef& scores_;
  const ScoreRef& weights_;
  int m_;
  std::vector<Entry> entries_;
};

}  // namespace

Assortment top_m_select(const ScoreRef& scores, int m) {
  const int k = item_count(scores, m);
  std::vector<Entry> entries;
  entries.reserve(k);
  for (int i = 1; i <= k; ++i) entries.push_back({scores(i), i});
  return Assortment(keep_best(entries, m));
}

Assortment max_weighted_assortment(const ScoreRef& scores,
                                   const ScoreRef& weights, int m,
                                   double tolerance) {
  const int k = item_count(scores, m);
  if (weights.size() != scores.size()) {
    throw std::invalid_argument("weights and scores differ in length");
  }
  if (!(scores(0) > 0)) {
    throw std::invalid_argument("no-choice score must be positive");
  }
  const double theta0 = scores(0);

  LevelSearch search(scores, weights, m);
  if (search.surplus(0.0) <= 0.0) {
    // Nothing earns revenue; offer the best singleton (item 1 if all zero).
    int best = 1;
    for (int i = 2; i <= k; ++i) {
      if (weights(i) * scores(i) > weights(best) * scores(best)) best = i;
    }
    return Assortment({best});
  }

  double lo = 0.0;
  double hi = weights.tail(k).maxCoeff();
  while (hi - lo > tolerance) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (search.surplus(mid) > mid * theta0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // The set attaining the surplus at lo earns more than lo.
  search.surplus(lo);
  Assortment best(search.last_set());
  double best_value = expected_revenue(scores, weights, best);
  if (search.surplus(hi) > 0) {
    Assortment alt(search.last_set());
    const double v = expected_revenue(scores, weights, alt);
    if (v > best_value) best = std::move(alt);
  }
  return best;
}

std::pair<Assortment, double> brute_force_assortment(const ScoreRef& scores,
                                                     const ScoreRef& weights,
                                                     int m) {
  const int k = item_count(scores, m);
  if (k > kBruteForceMaxItems) {
    throw std::invalid_argument("brute_force_assortment: K=" +
                                std::to_string(k) + " exceeds " +
                                std::to_string(kBruteForceMaxItems));
  }
  std::vector<int> current;
  std::vector<int> best_items;
  double best_value = -1.0;

  // Depth-first extension visits subsets in lexicographic order.
  auto visit = [&](auto&& self, int next, double num, double den) -> void {
    for (int i = next; i <= k; ++i) {
      current.push_back(i);
      const double n2 = num + weights(i) * scores(i);
      const double d2 = den + scores(i);
      // Same summation order as expected_revenue, so values agree exactly.
      const double v = n2 / d2;
      if (v > best_value) {
        best_value = v;
        best_items = current;
      }
      if (static_cast<int>(current.size()) < m) self(self, i + 1, n2, d2);
      current.pop_back();
    }
  };
  visit(visit, 1, 0.0, scores(0));
  return {Assortment(best_items), best_value};
}

}  // namespace aoa
