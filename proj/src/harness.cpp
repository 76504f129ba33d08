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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "aoa/assortment_opt.hpp"

namespace aoa {

OptimalSet compute_sstar(const PLInstance& inst, Objective objective) {
  const auto& theta = inst.scores();
  if (objective == Objective::kTopM) {
    Assortment s = top_m_select(theta, inst.cap());
    const double value = total_score(theta, s);
    return {std::move(s), value};
  }
  if (inst.num_items() <= 12) {
    auto [s, value] = brute_force_assortment(theta, inst.weights(), inst.cap());
    return {std::move(s), value};
  }
  Assortment s = max_weighted_assortment(theta, inst.weights(), inst.cap(), 0.0);
  const double value = expected_revenue(inst, s);
  return {std::move(s), value};
}

std::vector<std::int64_t> geometric_checkpoints(std::int64_t horizon,
                                                double ratio) {
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  std::vector<std::int64_t> out;
  for (int j = 0;; ++j) {
    const auto t = static_cast<std::int64_t>(std::ceil(std::pow(ratio, j)));
    if (t >= horizon) break;
    if (out.empty() || out.back() != t) out.push_back(t);
  }
  out.push_back(horizon);
  return out;
}

std::vector<std::int64_t> make_checkpoints(CheckpointKind kind,
                                           std::int64_t horizon) {
  if (kind == CheckpointKind::kGeometric) return geometric_checkpoints(horizon);
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  std::vector<std::int64_t> out(horizon);
  for (std::int64_t t = 0; t < horizon; ++t) out[t] = t + 1;
  return out;
}

RegretTrace run_episode(const PLInstance& inst, Policy& policy,
                        std::int64_t horizon, std::uint64_t seed,
                        std::span<const std::int64_t> checkpoints,
                        const RoundHook& hook) {
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (!policy.accepts(inst.feedback())) {
    throw ConfigError("policy " + std::string(policy.name()) +
                      " cannot consume the instance's feedback kind");
  }
  for (std::size_t n = 0; n < checkpoints.size(); ++n) {
    if (checkpoints[n] < 1 || checkpoints[n] > horizon ||
        (n > 0 && checkpoints[n] <= checkpoints[n - 1])) {
      throw ConfigError("checkpoints must increase strictly within [1, T]");
    }
  }

  const OptimalSet best_top = compute_sstar(inst, Objective::kTopM);
  const OptimalSet best_wtd = compute_sstar(inst, Objective::kWeighted);
  const double m = inst.cap();
  const auto& theta = inst.scores();

  policy.reset(derive_seed(seed, static_cast<std::uint64_t>(Stream::kPolicy)));
  Rng env = make_rng(seed, Stream::kEnvironment);

  RegretTrace trace;
  trace.seed = seed;
  trace.policy = std::string(policy.name());
  trace.instance = inst.name();
  trace.points.reserve(checkpoints.size());

  double cum_top = 0;
  double cum_wtd = 0;
  std::size_t next = 0;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const Assortment s = policy.select(t);
    inst.check_offer(s);
    const Feedback fb = sample_feedback(inst, s, env);
    policy.observe(s, fb);
    if (hook) hook(t, s, fb);

    cum_top += (best_top.value - total_score(theta, s)) / m;
    cum_wtd += best_wtd.value - expected_revenue(inst, s);
    if (next < checkpoints.size() && checkpoints[next] == t) {
      trace.points.push_back({t, cum_top, cum_wtd});
      ++next;
    }
  }
  return trace;
}

PLInstance episode_instance(const BatchConfig& config, std::uint64_t seed) {
  if (!config.permute_items) return config.instance;
  const int k = config.instance.num_items();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i + 1;
  Rng rng = make_rng(seed, Stream::kRelabel);
  for (int i = k - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_index(rng, i + 1));
    std::swap(perm[i], perm[j]);
  }
  return config.instance.relabeled(perm);
}

namespace {

std::string describe(const BatchConfig& c) {
  std::ostringstream os;
  os.precision(17);
  const auto& inst = c.instance;
  os << "instance=" << inst.name() << ";K=" << inst.num_items()
     << ";m=" << inst.cap() << ";theta0=" << inst.theta0() << ";theta=";
  for (int i = 1; i <= inst.num_items(); ++i) os << inst.theta(i) << ',';
  os << ";r=";
  for (int i = 1; i <= inst.num_items(); ++i) os << inst.weight(i) << ',';
  os << ";feedback="
     << (inst.feedback().kind == FeedbackKind::kWinner ? "winner" : "topk")
     << inst.feedback().k << ";policy=" << c.policy.name
     << ";x=" << (c.policy.x ? *c.policy.x : -1.0)
     << ";cap=" << c.policy.theta_cap
     << ";objective=" << to_string(c.policy.objective)
     << ";mnl_c=" << c.policy.mnl_constant << ";T=" << c.horizon
     << ";checkpoints="
     << (c.checkpoints == CheckpointKind::kGeometric ? "geometric" : "full")
     << ";permute=" << c.permute_items << ";seeds=";
  std::vector<std::uint64_t> seeds = c.seeds;
  std::sort(seeds.begin(), seeds.end());
  for (auto s : seeds) os << s << ',';
  return os.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

BatchResult aggregate(std::vector<RegretTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("aggregate: no traces");
  std::sort(traces.begin(), traces.end(),
            [](const RegretTrace& a, const RegretTrace& b) {
              return a.seed < b.seed;
            });
  const std::size_t points = traces.front().points.size();
  for (const auto& tr : traces) {
    if (tr.points.size() != points) {
      throw std::invalid_argument("aggregate: traces differ in checkpoints");
    }
    for (std::size_t p = 0; p < points; ++p) {
      if (tr.points[p].t != traces.front().points[p].t) {
        throw std::invalid_argument("aggregate: traces differ in checkpoints");
      }
    }
  }

  const auto n = static_cast<Eigen::Index>(points);
  BatchResult out;
  out.mean_top.resize(n);
  out.std_top.resize(n);
  out.mean_wtd.resize(n);
  out.std_wtd.resize(n);
  std::vector<double> column(traces.size());
  auto moments = [&](double& mean, double& sd) {
    const double count = static_cast<double>(column.size());
    mean = pairwise_sum(column) / count;
    if (column.size() < 2) {
      sd = 0;
      return;
    }
    for (double& v : column) v = (v - mean) * (v - mean);
    sd = std::sqrt(pairwise_sum(column) / (count - 1));
  };
  for (std::size_t p = 0; p < points; ++p) {
    out.t.push_back(traces.front().points[p].t);
    for (std::size_t s = 0; s < traces.size(); ++s) {
      column[s] = traces[s].points[p].reg_top;
    }
    moments(out.mean_top(p), out.std_top(p));
    for (std::size_t s = 0; s < traces.size(); ++s) {
      column[s] = traces[s].points[p].reg_wtd;
    }
    moments(out.mean_wtd(p), out.std_wtd(p));
  }
  for (const auto& tr : traces) out.seeds.push_back(tr.seed);
  out.traces = std::move(traces);
  return out;
}

BatchResult run_batch(const BatchConfig& config) {
  if (config.seeds.empty()) throw ConfigError("batch needs at least one seed");
  {
    std::vector<std::uint64_t> sorted = config.seeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConfigError("seed list contains duplicates");
    }
  }
  if (config.horizon < 1) throw ConfigError("horizon must be >= 1");
  {
    auto probe = make_policy(config.policy, config.instance, config.horizon);
    if (!probe->accepts(config.instance.feedback())) {
      throw ConfigError("policy " + config.policy.name +
                        " cannot consume the instance's feedback kind");
    }
  }

  const auto checkpoints = make_checkpoints(config.checkpoints, config.horizon);
  const std::size_t jobs = config.seeds.size();
  std::vector<RegretTrace> traces(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> cursor{0};

  auto worker = [&] {
    for (std::size_t j = cursor++; j < jobs; j = cursor++) {
      try {
        const std::uint64_t seed = config.seeds[j];
        const PLInstance inst = episode_instance(config, seed);
        auto policy = make_policy(config.policy, inst, config.horizon);
        traces[j] =
            run_episode(inst, *policy, config.horizon, seed, checkpoints);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };

  const int threads =
      std::clamp<int>(config.threads, 1, static_cast<int>(jobs));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int n = 0; n < threads; ++n) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BatchResult out = aggregate(std::move(traces));
  out.fingerprint = fnv1a_hex(describe(config));
  return out;
}

}  // namespace aoa
