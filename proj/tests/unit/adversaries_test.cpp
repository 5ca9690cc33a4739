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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "expect_error.hpp"
#include "swapreg/adversaries.hpp"

namespace swapreg {
namespace {

AdversaryView Empty() { return AdversaryView{}; }

TEST(Adversary, FixedVEmitsSameV) {
  Adversary adv(FixedV{0.37}, 1);
  for (int t = 0; t < 5; ++t) {
    const EmittedLoss e = adv.NextLoss(Empty());
    EXPECT_DOUBLE_EQ(e.loss(0.0), 0.37);
    EXPECT_DOUBLE_EQ(e.loss(0.37), 0.0);
    ASSERT_TRUE(e.outcome.has_value());
    EXPECT_DOUBLE_EQ(*e.outcome, 0.37);
  }
}

TEST(Adversary, TwoPointMixture) {
  Adversary adv(TwoPoint{0.2, 0.0}, 1);
  const LossMixture m = adv.NextMixture(1);
  ASSERT_EQ(m.losses.size(), 2u);
  EXPECT_DOUBLE_EQ(m.weights[0], 0.5);
  EXPECT_DOUBLE_EQ(m.weights[1], 0.5);
  EXPECT_DOUBLE_EQ(m.losses[0](0.2), 0.0);
  EXPECT_DOUBLE_EQ(m.losses[1](0.7), 0.0);
}

TEST(Adversary, TwoPointDrawsFrequencies) {
  Adversary adv(TwoPoint{0.2, 0.1}, 3);
  int low = 0;
  const int n = 20000;
  for (int t = 0; t < n; ++t) low += *adv.NextLoss(Empty()).outcome == 0.2 ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(low) / n, 0.6, 4 * std::sqrt(0.24 / n));
}

TEST(Adversary, BernoulliConcentrates) {
  Adversary adv(BernoulliMedian{0.5}, 9);
  const int n = 10000;
  double sum = 0.0;
  for (int t = 0; t < n; ++t) {
    const double y = *adv.NextLoss(Empty()).outcome;
    EXPECT_TRUE(y == 0.0 || y == 1.0);
    sum += y;
  }
  EXPECT_NEAR(sum / n, 0.5, 3.0 / 2.0 / std::sqrt(n));
}

TEST(Adversary, UniformGapStaysStrictlyInside) {
  Adversary adv(UniformGap{0.31, 0.39, 101}, 2);
  for (int t = 0; t < 2000; ++t) {
    const double y = *adv.NextLoss(Empty()).outcome;
    EXPECT_GT(y, 0.31);
    EXPECT_LT(y, 0.39);
  }
  const LossMixture m = adv.NextMixture(1);
  EXPECT_EQ(m.losses.size(), 101u);
}

TEST(Adversary, AdaptiveSeesKappaOnly) {
  Adversary adv(Adaptive{"anti_kappa"}, 1);
  const std::vector<double> kappa = {0.9, 0.1};
  const std::vector<double> points = {0.1, 0.9};
  AdversaryView view;
  view.kappa = kappa;
  view.action_points = points;
  EXPECT_DOUBLE_EQ(*adv.NextLoss(view).outcome, 1.0);
  EXPECT_SWAPREG_ERROR(adv.NextMixture(1), ErrorCode::kDomain);

  Adversary chase(Adaptive{"chase_last"}, 1);
  const std::vector<double> past = {0.8};
  AdversaryView v2;
  v2.past_predictions = past;
  EXPECT_DOUBLE_EQ(*chase.NextLoss(v2).outcome, 0.0);
}

TEST(Adversary, SameSeedSameStream) {
  Adversary a(BernoulliMedian{0.3}, 42);
  Adversary b(BernoulliMedian{0.3}, 42);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(*a.NextLoss(Empty()).outcome, *b.NextLoss(Empty()).outcome);
  }
}

TEST(AdversarySpec, ValidationErrors) {
  EXPECT_SWAPREG_ERROR(Adversary(TwoPoint{0.6, 0.0}, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(Adversary(TwoPoint{0.2, 0.5}, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(Adversary(UniformGap{0.4, 0.3, 10}, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(Adversary(FixedV{1.2}, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(Adversary(Adaptive{"nope"}, 1), ErrorCode::kDomain);
}

TEST(AdversarySpec, JsonRoundTrip) {
  const std::vector<AdversarySpec> specs = {FixedV{0.25}, TwoPoint{0.2, 0.01}, BernoulliMedian{0.4},
                                            UniformGap{0.31, 0.39, 17}, Adaptive{"chase_last"}};
  for (const AdversarySpec& s : specs) {
    const std::string text = AdversarySpecJson(s);
    EXPECT_EQ(AdversarySpecJson(ParseAdversarySpec(text)), text);
  }
  EXPECT_SWAPREG_ERROR(ParseAdversarySpec("{\"kind\":\"fixed_v\""), ErrorCode::kParse);
  EXPECT_SWAPREG_ERROR(ParseAdversarySpec("{\"kind\":\"other\"}"), ErrorCode::kParse);
  EXPECT_SWAPREG_ERROR(ParseAdversarySpec("{\"kind\":\"two_point\",\"b\":0.9}"), ErrorCode::kDomain);
}

}  // namespace
}  // namespace swapreg
