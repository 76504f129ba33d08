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

#include "aoa/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace aoa {
namespace {

using nlohmann::json;

// Reads fields of one JSON object, remembering which keys were consumed so
// that leftovers (typos) can be reported.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("", "expected an object");
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ConfigError(where(key) + ": " + msg);
  }

  std::string where(const std::string& key) const {
    if (key.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    used_.insert(key);
    return obj_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) fail(key, "expected true or false");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) fail(key, "expected an integer");
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) fail(key, "expected a number");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) fail(key, "expected a string");
      }
      return v.get<T>();
    } catch (const json::exception& e) {
      fail(key, e.what());
    }
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail(key, "expected an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto& item : obj_.items()) {
      if (!used_.count(item.key())) fail(item.key(), "unknown key");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> used_;
};

InstanceSpec parse_instance(const json& doc) {
  Fields f(doc, "instance");
  InstanceSpec s;
  s.generator = f.get<std::string>("generator", s.generator);
  s.num_items = f.get("num_items", s.num_items);
  s.top = f.get("top", s.top);
  s.gap = f.get("gap", s.gap);
  s.base = f.get("base", s.base);
  s.spike_index = f.get("spike_index", s.spike_index);
  s.spike = f.get("spike", s.spike);
  if (f.has("theta")) s.theta = f.numbers("theta");
  s.theta0 = f.get("theta0", s.theta0);
  s.cap = f.get("cap", s.cap);
  s.permute_items = f.get("permute_items", s.permute_items);
  s.name = f.get<std::string>("name", s.generator + std::to_string(s.num_items));

  if (s.generator == "explicit") {
    if (s.theta.empty()) f.fail("theta", "explicit generator needs theta");
    if (f.has("num_items") &&
        s.num_items != static_cast<int>(s.theta.size())) {
      f.fail("num_items", "does not match the length of theta");
    }
    s.num_items = static_cast<int>(s.theta.size());
  } else if (s.generator != "arith" && s.generator != "bad") {
    f.fail("generator", "expected one of arith, bad, explicit");
  } else if (!s.theta.empty()) {
    f.fail("theta", "only used by the explicit generator");
  }
  if (s.num_items < 1) f.fail("num_items", "must be >= 1");
  if (s.cap < 1 || s.cap > s.num_items) f.fail("cap", "must lie in [1, num_items]");
  if (!(s.theta0 > 0)) f.fail("theta0", "must be positive");

  if (f.has("weights")) {
    Fields w(f.raw("weights"), "instance.weights");
    s.weights_kind = w.get<std::string>("kind", "ones");
    if (s.weights_kind == "explicit") {
      if (!w.has("values")) w.fail("values", "required for explicit weights");
      s.weights = w.numbers("values");
      if (static_cast<int>(s.weights.size()) != s.num_items) {
        w.fail("values", "needs one weight per item");
      }
      for (double r : s.weights) {
        if (!(r >= 0 && r <= 1)) w.fail("values", "weights must lie in [0, 1]");
      }
    } else if (s.weights_kind == "uniform") {
      s.weights_seed = w.get<std::uint64_t>("seed", 0);
    } else if (s.weights_kind != "ones") {
      w.fail("kind", "expected one of ones, explicit, uniform");
    }
    w.finish();
  }
  f.finish();
  return s;
}

FeedbackSpec parse_feedback(const json& doc) {
  Fields f(doc, "feedback");
  const auto kind = f.get<std::string>("kind", "winner");
  FeedbackSpec out;
  if (kind == "winner") {
    out = FeedbackSpec::winner();
  } else if (kind == "topk") {
    out = FeedbackSpec::top_k(f.get("k", 1));
    if (out.k < 1) f.fail("k", "must be >= 1");
  } else {
    f.fail("kind", "expected winner or topk");
  }
  f.finish();
  return out;
}

Objective parse_objective(Fields& f) {
  const auto v = f.get<std::string>("objective", "wtd");
  if (v == "wtd") return Objective::kWeighted;
  if (v == "top") return Objective::kTopM;
  f.fail("objective", "expected top or wtd");
}

PolicySpec parse_policy(const json& doc, const std::string& path) {
  PolicySpec p;
  if (doc.is_string()) {
    p.name = doc.get<std::string>();
  } else {
    Fields f(doc, path);
    if (!f.has("name")) f.fail("name", "required");
    p.name = f.get<std::string>("name", "");
    if (f.has("x")) {
      p.x = f.get("x", 0.0);
      if (!(*p.x > 0)) f.fail("x", "must be positive");
    }
    p.theta_cap = f.get("theta_cap", p.theta_cap);
    if (!(p.theta_cap > 0)) f.fail("theta_cap", "must be positive");
    p.objective = parse_objective(f);
    p.mnl_constant = f.get("mnl_constant", p.mnl_constant);
    if (!(p.mnl_constant > 0)) f.fail("mnl_constant", "must be positive");
    f.finish();
  }
  if (!is_policy_name(p.name)) {
    throw ConfigError(path + ".name: unknown policy '" + p.name +
                      "'; valid names: " + policy_names_joined());
  }
  return p;
}

std::vector<std::uint64_t> parse_seeds(const json& doc) {
  std::vector<std::uint64_t> out;
  if (doc.is_array()) {
    for (const auto& e : doc) {
      if (!e.is_number_unsigned()) {
        throw ConfigError("seeds: expected nonnegative integers");
      }
      out.push_back(e.get<std::uint64_t>());
    }
  } else {
    Fields f(doc, "seeds");
    const int count = f.get("count", 1);
    const auto base = f.get<std::uint64_t>("base", 1);
    if (count < 1) f.fail("count", "must be >= 1");
    f.finish();
    for (int n = 0; n < count; ++n) out.push_back(base + n);
  }
  if (out.empty()) throw ConfigError("seeds: at least one seed required");
  return out;
}

SweepSpec parse_sweep(const json& doc) {
  Fields f(doc, "sweep");
  SweepSpec s;
  s.kind = f.get<std::string>("kind", "");
  if (s.kind == "theta0") {
    s.values.assign(std::begin(kDefaultTheta0Sweep), std::end(kDefaultTheta0Sweep));
  } else if (s.kind == "topk") {
    s.values.assign(std::begin(kDefaultTopKSweep), std::end(kDefaultTopKSweep));
  } else {
    f.fail("kind", "expected theta0 or topk");
  }
  if (f.has("values")) s.values = f.numbers("values");
  if (s.values.empty()) f.fail("values", "must be nonempty");
  for (double v : s.values) {
    if (!(v > 0)) f.fail("values", "must be positive");
    if (s.kind == "topk" && v != std::floor(v)) {
      f.fail("values", "k values must be integers");
    }
  }
  f.finish();
  return s;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  Fields f(doc, "");
  RunConfig c;
  if (!f.has("instance")) f.fail("instance", "required");
  c.instance = parse_instance(f.raw("instance"));
  if (f.has("feedback")) c.feedback = parse_feedback(f.raw("feedback"));
  if (c.feedback.kind == FeedbackKind::kTopK && c.feedback.k > c.instance.cap) {
    f.fail("feedback", "k must not exceed instance.cap");
  }
  if (!f.has("policies")) f.fail("policies", "required");
  const json& pols = f.raw("policies");
  if (!pols.is_array() || pols.empty()) {
    f.fail("policies", "expected a nonempty array");
  }
  for (std::size_t n = 0; n < pols.size(); ++n) {
    c.policies.push_back(
        parse_policy(pols[n], "policies[" + std::to_string(n) + "]"));
  }
  c.horizon = f.get<std::int64_t>("horizon", c.horizon);
  if (c.horizon < 2) f.fail("horizon", "must be >= 2");
  if (f.has("seeds")) c.seeds = parse_seeds(f.raw("seeds"));
  const auto cp = f.get<std::string>("checkpoints", "geometric");
  if (cp == "geometric") {
    c.checkpoints = CheckpointKind::kGeometric;
  } else if (cp == "full") {
    c.checkpoints = CheckpointKind::kFull;
  } else {
    f.fail("checkpoints", "expected geometric or full");
  }
  c.threads = f.get("threads", c.threads);
  if (c.threads < 1) f.fail("threads", "must be >= 1");
  c.output_dir = f.get<std::string>("output_dir", "");
  if (f.has("sweep")) c.sweep = parse_sweep(f.raw("sweep"));
  f.finish();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  const InstanceSpec& s = c.instance;
  json inst = {{"name", s.name},
               {"generator", s.generator},
               {"num_items", s.num_items},
               {"theta0", s.theta0},
               {"cap", s.cap},
               {"permute_items", s.permute_items}};
  if (s.generator == "arith") {
    inst["top"] = s.top;
    inst["gap"] = s.gap;
  } else if (s.generator == "bad") {
    inst["base"] = s.base;
    inst["spike_index"] = s.spike_index;
    inst["spike"] = s.spike;
  } else {
    inst["theta"] = s.theta;
  }
  json weights = {{"kind", s.weights_kind}};
  if (s.weights_kind == "explicit") weights["values"] = s.weights;
  if (s.weights_kind == "uniform") weights["seed"] = s.weights_seed;
  inst["weights"] = weights;

  json fb = {{"kind", c.feedback.kind == FeedbackKind::kWinner ? "winner" : "topk"}};
  if (c.feedback.kind == FeedbackKind::kTopK) fb["k"] = c.feedback.k;

  json pols = json::array();
  for (const auto& p : c.policies) {
    json j = {{"name", p.name},
              {"theta_cap", p.theta_cap},
              {"objective", std::string(to_string(p.objective))},
              {"mnl_constant", p.mnl_constant}};
    if (p.x) j["x"] = *p.x;
    pols.push_back(j);
  }

  json doc = {{"instance", inst},
              {"feedback", fb},
              {"policies", pols},
              {"horizon", c.horizon},
              {"seeds", c.seeds},
              {"checkpoints",
               c.checkpoints == CheckpointKind::kGeometric ? "geometric" : "full"},
              {"threads", c.threads},
              {"output_dir", c.output_dir}};
  if (c.sweep) doc["sweep"] = {{"kind", c.sweep->kind}, {"values", c.sweep->values}};
  return doc;
}

PLInstance build_instance(const InstanceSpec& s, FeedbackSpec feedback) {
  try {
    PLInstance base = [&] {
      if (s.generator == "arith") return make_arith(s.num_items, s.top, s.gap);
      if (s.generator == "bad") {
        return make_bad(s.num_items, s.base, s.spike_index, s.spike);
      }
      Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(
          s.theta.data(), static_cast<Eigen::Index>(s.theta.size()));
      return PLInstance(theta, 1.0, Eigen::VectorXd::Ones(theta.size()),
                        static_cast<int>(theta.size()));
    }();
    Eigen::VectorXd weights = Eigen::VectorXd::Ones(s.num_items);
    if (s.weights_kind == "explicit") {
      weights = Eigen::Map<const Eigen::VectorXd>(s.weights.data(), s.num_items);
    } else if (s.weights_kind == "uniform") {
      Rng rng(s.weights_seed);
      for (int i = 0; i < s.num_items; ++i) weights(i) = uniform01(rng);
    }
    return PLInstance(base.scores().tail(s.num_items), s.theta0, weights,
                      s.cap, feedback, s.name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
}

}  // namespace aoa
