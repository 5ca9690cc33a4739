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
#include <numeric>
#include <random>
#include <vector>

#include "expect_error.hpp"
#include "swapreg/experts.hpp"

namespace swapreg {
namespace {

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

TEST(ExpertState, SingleExpertShortHorizon) {
  const ExpertState s(1, 2);
  const auto w = s.Weights();
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NEAR(w[0], 1.0, 1e-15);
  double total = 0.0;
  for (std::size_t j = 0; j < s.rates().size(); ++j) total += s.SubWeight(0, j);
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(ExpertState, RateGridSize) {
  const ExpertState s(4, 1024);
  EXPECT_EQ(s.rates().size(), 11u);
  EXPECT_DOUBLE_EQ(s.rates().front(), 1.0 / 32);
  EXPECT_DOUBLE_EQ(s.rates().back(), 1.0 / 32 / 1024);
}

TEST(ExpertState, PriorIsUniformOverExpertsAndQuadraticInRate) {
  const ExpertState s(5, 300);
  for (double w : s.Weights()) EXPECT_NEAR(w, 0.2, 1e-15);
  const double r0 = s.SubWeight(2, 0) / s.SubWeight(2, 1);
  const double eta_ratio = s.rates()[0] / s.rates()[1];
  EXPECT_NEAR(r0, eta_ratio * eta_ratio, 1e-12);
}

TEST(ExpertState, ZeroRewardsLeaveWeightsUnchanged) {
  ExpertState s(3, 64);
  const auto before = s.Weights();
  const std::vector<double> zeros(3, 0.0);
  s.Update(zeros);
  const auto after = s.Weights();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(after[i], before[i], 1e-15);
  EXPECT_EQ(s.round(), 1u);
}

TEST(ExpertState, LossLowersThatExpertsWeight) {
  ExpertState s(4, 128);
  const double before = s.Weights()[1];
  s.Update(std::vector<double>{0.0, -1.0, 0.0, 0.0});
  const auto w = s.Weights();
  EXPECT_LT(w[1], before);
  EXPECT_NEAR(Sum(w), 1.0, 1e-12);
}

TEST(ExpertState, SingleRateClosedForm) {
  const double eta = 1.0 / 32;
  ExpertState s(2, std::vector<double>{eta});
  s.Update(std::vector<double>{1.0, -1.0});
  const auto w = s.Weights();
  EXPECT_NEAR(w[0] / w[1], std::exp(2 * eta), 1e-12);
  EXPECT_NEAR(Sum(w), 1.0, 1e-12);
}

TEST(ExpertState, RepeatedRewardsConcentrate) {
  ExpertState s(2, 100);
  double last = s.Weights()[0];
  for (int t = 1; t <= 200; ++t) {
    s.Update(std::vector<double>{1.0, -1.0});
    const double w = s.Weights()[0];
    EXPECT_GT(w, last);
    last = w;
    // Slower rates hold part of the prior mass and lag behind the 1/32 rate.
    if (t == 100) EXPECT_GT(w, 0.98);
  }
  EXPECT_GT(last, 0.99);
}

TEST(ExpertState, StaysNormalizedUnderRandomRewards) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ExpertState s(16, 1000);
  std::vector<double> r(16);
  for (int t = 0; t < 1000; ++t) {
    for (double& x : r) x = u(rng);
    s.Update(r);
    const auto w = s.Weights();
    ASSERT_NEAR(Sum(w), 1.0, 1e-10);
    for (double x : w) ASSERT_GE(x, 0.0);
  }
}

TEST(ExpertState, RejectsBadInput) {
  ExpertState s(2, 16);
  EXPECT_SWAPREG_ERROR(s.Update(std::vector<double>{1.5, 0.0}), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(s.Update(std::vector<double>{0.0}), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(ExpertState(0, 16), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(ExpertState(2, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(ExpertState(2, std::vector<double>{0.5}), ErrorCode::kDomain);
}

}  // namespace
}  // namespace swapreg
