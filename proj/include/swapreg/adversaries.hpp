// Copyright 2026 The swapreg Authors.
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

#ifndef SWAPREG_ADVERSARIES_HPP_
#define SWAPREG_ADVERSARIES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swapreg/losses.hpp"
#include "swapreg/rng.hpp"

namespace swapreg {

// |p - v| every round.
struct FixedV {
  double v = 0.5;
};

// v = b with probability 1/2 + epsilon, otherwise b + 1/2.
struct TwoPoint {
  double b = 0.2;
  double epsilon = 0.0;
};

// y ~ Bernoulli(bias), loss |p - y|.
struct BernoulliMedian {
  double bias = 0.5;
};

// y uniform on grid_points evenly spaced points strictly inside (lo, hi),
// loss |p - y|.
struct UniformGap {
  double lo = 0.0;
  double hi = 1.0;
  std::uint32_t grid_points = 101;
};

// Built-in adaptive rules:
//   "chase_last"  |p - v| with v the endpoint farthest from last round's p.
//   "anti_kappa"  |p - v| with v the endpoint farthest from the mean of the
//                 committed distribution.
struct Adaptive {
  std::string rule = "anti_kappa";
};

using AdversarySpec = std::variant<FixedV, TwoPoint, BernoulliMedian, UniformGap, Adaptive>;

// JSON object with a "kind" key: fixed_v, two_point, bernoulli_median,
// uniform_gap, adaptive; remaining keys are the struct fields.
AdversarySpec ParseAdversarySpec(std::string_view json_text);
std::string AdversarySpecJson(const AdversarySpec& spec);
// kDomain if a parameter is out of range.
void ValidateAdversarySpec(const AdversarySpec& spec);

// What an adaptive rule may look at: everything before round t plus the
// committed distribution for round t, but not the round-t draw.
struct AdversaryView {
  std::uint64_t t = 1;
  std::span<const double> past_predictions;
  std::span<const double> past_outcomes;
  std::span<const double> kappa;          // over the predictor's actions
  std::span<const double> action_points;  // prediction made by each action
};

using AdaptiveRule = std::function<double(const AdversaryView&)>;

struct EmittedLoss {
  PLConvexLoss loss;
  std::optional<double> outcome;
};

// A loss distribution revealed ahead of the prediction.
struct LossMixture {
  std::vector<PLConvexLoss> losses;
  std::vector<double> weights;
  std::vector<double> outcomes;  // outcome attached to each component
};

class Adversary {
 public:
  Adversary(AdversarySpec spec, std::uint64_t seed);

  const AdversarySpec& spec() const { return spec_; }

  // Adversarial protocol: the round-t loss given the committed kappa.
  EmittedLoss NextLoss(const AdversaryView& view);

  // Order-reversed protocol: the distribution pi_t, and then a draw from it.
  LossMixture NextMixture(std::uint64_t t);
  EmittedLoss Draw(const LossMixture& mixture);

 private:
  AdversarySpec spec_;
  AdaptiveRule adaptive_;
  CounterRng rng_;
};

}  // namespace swapreg

#endif  // SWAPREG_ADVERSARIES_HPP_
