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
#include <map>
#include <random>
#include <vector>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "swapreg/predictors.hpp"

namespace swapreg {
namespace {

TEST(GammaFor, FormulaAndDomain) {
  EXPECT_NEAR(GammaFor(2, 0.5), std::sqrt(std::log(2.0) * std::log(2.0) / 2.0), 1e-15);
  EXPECT_NEAR(GammaFor(1024, 1.0 / 1024), std::log(1024.0) / 32.0, 1e-15);
  EXPECT_DOUBLE_EQ(GammaFor(3, 1e-9), 1.0);
  EXPECT_SWAPREG_ERROR(GammaFor(1, 0.5), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(GammaFor(8, 0.5), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(GammaFor(8, 0.0), ErrorCode::kDomain);
}

TEST(EfficientPredictor, TinyHorizon) {
  EfficientPredictor pred(2, 0.5, 1);
  EXPECT_NEAR(pred.gamma(), 0.4901, 1e-4);
  ASSERT_EQ(pred.bins().scales().size(), 2u);  // {gamma, 2 gamma}
  EXPECT_DOUBLE_EQ(pred.bins().scales()[0], pred.gamma());
  for (int t = 0; t < 2; ++t) {
    const Prediction& p = pred.Predict();
    bool on_grid = false;
    for (const Bin& bin : pred.bins().theta()) on_grid = on_grid || bin.b == p.p;
    EXPECT_TRUE(on_grid);
    pred.Observe(PLConvexLoss::VShape(0.3));
  }
  EXPECT_EQ(pred.rounds_played(), 2u);
}

TEST(EfficientPredictor, FirstRoundKappaIsFeasible) {
  EfficientPredictor pred(256, 1.0 / 256, 7);
  const Prediction& p = pred.Predict();
  double mass = 0.0;
  for (double k : p.kappa) {
    EXPECT_GE(k, 0.0);
    mass += k;
  }
  EXPECT_NEAR(mass, 1.0, 1e-12);
  EXPECT_LE(pred.last_kappa().max_violation, kFeasibilityTol);
  EXPECT_GT(p.kappa[p.index], 0.0);
}

TEST(EfficientPredictor, ProtocolOrderIsEnforced) {
  EfficientPredictor pred(3, 1.0 / 3, 1);
  EXPECT_SWAPREG_ERROR(pred.Observe(PLConvexLoss::VShape(0.5)), ErrorCode::kProtocol);
  pred.Predict();
  EXPECT_SWAPREG_ERROR(pred.Predict(), ErrorCode::kProtocol);
  for (int t = 0; t < 3; ++t) {
    if (!pred.awaiting_loss()) pred.Predict();
    pred.Observe(PLConvexLoss::VShape(0.5));
  }
  EXPECT_SWAPREG_ERROR(pred.Predict(), ErrorCode::kProtocol);
}

TEST(EfficientPredictor, SameSeedSameTranscript) {
  auto play = [](std::uint64_t seed) {
    EfficientPredictor pred(1024, 1.0 / 1024, seed);
    std::vector<double> out;
    for (int t = 0; t < 64; ++t) {
      const Prediction& p = pred.Predict();
      out.push_back(p.p);
      out.push_back(static_cast<double>(p.index));
      for (double k : p.kappa) out.push_back(k);
      pred.Observe(PLConvexLoss::VShape(t % 3 == 0 ? 0.1 : 0.8));
    }
    return out;
  };
  EXPECT_EQ(play(3), play(3));
  EXPECT_NE(play(3), play(4));
}

TEST(ConstraintRewards, VanishOffSupport) {
  const BinSystem sys(0.1);
  std::vector<double> kappa(sys.theta_size(), 0.0);
  kappa[3] = 0.25;
  kappa[10] = 0.75;
  const auto u = ConstraintRewards(sys, kappa, Dist01::PointMass(0.42));
  for (std::size_t k = 0; k < sys.theta_size(); ++k) {
    if (k == 3 || k == 10) continue;
    for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(u[4 * k + x], 0.0);
  }
}

TEST(ConstraintRewards, PointMassSingleTerm) {
  const BinSystem sys(0.1);
  const std::size_t theta = sys.ThetaIndex(1, 1);  // (0.2, 0.2)
  const Bin& bin = sys.theta()[theta];
  std::vector<double> kappa(sys.theta_size(), 0.0);
  kappa[theta] = 1.0;
  const double v = bin.b + 2 * bin.r + 0.05;
  const auto u = ConstraintRewards(sys, kappa, Dist01::PointMass(v));
  const std::size_t id = ConstraintId{theta, Xi::kPlus2}.Index();
  EXPECT_NEAR(u[id], 1.0 - (0.5 - 0.1 / (4 * bin.r)), 1e-15);
}

VMixture V(double v) { return VShapeDecompose(PLConvexLoss::VShape(v)); }

TEST(TruthfulBin, Examples) {
  const BinSystem sys(0.1);
  {
    const std::vector<VMixture> c = {V(0.4)};
    const Bin& b = sys.theta()[TruthfulBin(sys, c, std::vector<double>{1.0})];
    EXPECT_NEAR(b.r, 0.1, 1e-15);
    EXPECT_NEAR(b.b, 0.4, 1e-12);
  }
  {
    const std::vector<VMixture> c = {V(0.0), V(1.0)};
    const Bin& b = sys.theta()[TruthfulBin(sys, c, std::vector<double>{0.5, 0.5})];
    EXPECT_NEAR(b.r, 0.8, 1e-15);
    EXPECT_DOUBLE_EQ(b.b, 0.0);
  }
  {
    const std::vector<VMixture> c = {V(0.4), V(0.5), V(0.6)};
    const Bin& b = sys.theta()[TruthfulBin(sys, c, std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3})];
    EXPECT_NEAR(b.r, 0.2, 1e-15);
    EXPECT_NEAR(b.b, 0.4, 1e-12);
  }
}

TEST(TruthfulBin, ExpectedConstraintsNonPositive) {
  std::mt19937_64 rng(21);
  const int xis[] = {-2, -1, 1, 2};
  for (double gamma : {0.05, 0.1, 0.2}) {
    const BinSystem sys(gamma);
    for (int trial = 0; trial < 100; ++trial) {
      const oracle::Atoms a = oracle::MakeRandomAtoms(rng, 6, trial % 2 ? 0.05 : 0.0);
      const Dist01 phi = Dist01::FromAtoms(a.v, a.m);
      const std::vector<VMixture> c = {VMixture{phi, 0.0}};
      const Bin& bin = sys.theta()[TruthfulBin(sys, c, std::vector<double>{1.0})];
      for (int x = 0; x < 4; ++x) {
        double e = 0.0;
        for (std::size_t i = 0; i < a.v.size(); ++i) {
          e += a.m[i] * oracle::H(bin.r, bin.b, xis[x], gamma, a.v[i]);
        }
        EXPECT_LE(e, 1e-12) << "gamma " << gamma << " trial " << trial << " xi " << xis[x];
      }
    }
  }
}

TEST(TruthfulPredictor, PlaysPointMassAndRecords) {
  TruthfulPredictor pred(16, 1.0 / 16);
  const std::vector<VMixture> c = {V(0.2), V(0.7)};
  const std::vector<double> w = {0.5, 0.5};
  for (int t = 0; t < 16; ++t) {
    const Prediction& p = pred.Predict(c, w);
    EXPECT_EQ(p.kappa[p.index], 1.0);
    pred.Observe(c[static_cast<std::size_t>(t % 2)], t % 2 ? 0.7 : 0.2);
  }
  EXPECT_EQ(pred.transcript().rounds.size(), 16u);
  EXPECT_SWAPREG_ERROR(pred.Predict(c, w), ErrorCode::kProtocol);
}

TEST(FixedGridPredictor, TwoPointGridIsExternalRegretWeights) {
  FixedGridPredictor pred(2, 100, 1);
  const Prediction& first = pred.Predict();
  EXPECT_NEAR(first.kappa[0], 0.5, 1e-12);
  pred.Observe(PLConvexLoss::VShape(1.0));
  const Prediction& second = pred.Predict();
  // Each learner saw loss 1 on point 0 scaled by its own probability 1/2.
  const double eta = pred.learning_rate();
  const double q1 = 1.0 / (1.0 + std::exp(-eta * 0.5));
  EXPECT_NEAR(second.kappa[1], q1, 1e-9);
}

TEST(FixedGridPredictor, ConcentratesNearStationaryMinimizer) {
  const std::uint64_t T = 4000;
  FixedGridPredictor pred(11, T, 5);
  std::map<double, int> late;
  for (std::uint64_t t = 0; t < T; ++t) {
    const Prediction& p = pred.Predict();
    if (t >= T - 500) ++late[p.p];
    pred.Observe(PLConvexLoss::VShape(0.31));
  }
  EXPECT_GT(late[0.3], 400);
}

TEST(FixedGridPredictor, FlatLossesKeepUniformPlay) {
  FixedGridPredictor pred(5, 200, 2);
  const PLConvexLoss flat({0.0, 1.0}, {0.0}, 0.5);
  for (int t = 0; t < 200; ++t) {
    const Prediction& p = pred.Predict();
    for (double k : p.kappa) EXPECT_NEAR(k, 0.2, 1e-12);
    pred.Observe(flat);
  }
}

TEST(FixedGridPredictor, RejectsBadParameters) {
  EXPECT_SWAPREG_ERROR(FixedGridPredictor(1, 10, 1), ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(FixedGridPredictor(5, 0, 1), ErrorCode::kDomain);
}

}  // namespace
}  // namespace swapreg
