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

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "swapreg/feasibility.hpp"
#include "swapreg/simplex.hpp"

namespace swapreg {
namespace {

TEST(Simplex, TextbookExample) {
  DenseMatrix a(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 2;
  a(2, 0) = 3;
  a(2, 1) = 2;
  const std::vector<double> b = {4, 12, 18};
  const std::vector<double> c = {3, 5};
  const LpSolution s = MaximizeStandardForm(a, b, c);
  EXPECT_NEAR(s.objective, 36.0, 1e-12);
  EXPECT_NEAR(s.x[0], 2.0, 1e-12);
  EXPECT_NEAR(s.x[1], 6.0, 1e-12);
}

TEST(Simplex, UnboundedIsSolverError) {
  DenseMatrix a(1, 2);
  a(0, 0) = 1.0;
  a(0, 1) = -1.0;
  const std::vector<double> b = {1.0};
  const std::vector<double> c = {0.0, 1.0};
  EXPECT_SWAPREG_ERROR(MaximizeStandardForm(a, b, c), ErrorCode::kSolver);
}

TEST(Simplex, BadShapesAreDomainErrors) {
  DenseMatrix a(1, 1, 1.0);
  EXPECT_SWAPREG_ERROR(MaximizeStandardForm(a, std::vector<double>{-1.0}, std::vector<double>{1.0}),
                       ErrorCode::kDomain);
  EXPECT_SWAPREG_ERROR(MaximizeStandardForm(a, std::vector<double>{1.0, 1.0},
                                            std::vector<double>{1.0}),
                       ErrorCode::kDomain);
}

TEST(Simplex, PivotCapIsSolverError) {
  DenseMatrix a(3, 2);
  a(0, 0) = 1;
  a(1, 1) = 2;
  a(2, 0) = 3;
  a(2, 1) = 2;
  EXPECT_SWAPREG_ERROR(
      MaximizeStandardForm(a, std::vector<double>{4, 12, 18}, std::vector<double>{3, 5}, 1),
      ErrorCode::kSolver);
}

// Two variables: the optimum sits on a vertex, and every vertex is the
// intersection of two of the m + 2 boundary lines.
double BruteForce2d(const DenseMatrix& a, const std::vector<double>& b,
                    const std::vector<double>& c) {
  std::vector<std::array<double, 3>> lines;  // p*x + q*y = r
  for (std::size_t i = 0; i < a.rows; ++i) lines.push_back({a(i, 0), a(i, 1), b[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
      if (std::abs(det) < 1e-12) continue;
      const double x = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det;
      const double y = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det;
      if (x < -1e-9 || y < -1e-9) continue;
      bool ok = true;
      for (std::size_t k = 0; k < a.rows; ++k) ok = ok && a(k, 0) * x + a(k, 1) * y <= b[k] + 1e-9;
      if (ok) best = std::max(best, c[0] * x + c[1] * y);
    }
  }
  return best;
}

TEST(Simplex, MatchesVertexEnumerationIn2d) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pos(0.1, 3.0);
  std::uniform_real_distribution<double> any(-1.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + trial % 6;
    DenseMatrix a(m, 2);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a(i, 0) = any(rng);
      a(i, 1) = any(rng);
      b[i] = trial % 4 == 0 ? 1.0 : pos(rng);
    }
    // One all-positive row keeps the problem bounded.
    a(0, 0) = pos(rng);
    a(0, 1) = pos(rng);
    const std::vector<double> c = {any(rng), any(rng)};
    const LpSolution s = MaximizeStandardForm(a, b, c);
    EXPECT_NEAR(s.objective, BruteForce2d(a, b, c), 1e-9) << "trial " << trial;
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_LE(a(i, 0) * s.x[0] + a(i, 1) * s.x[1], b[i] + 1e-9);
    }
    EXPECT_GE(s.x[0], -1e-12);
    EXPECT_GE(s.x[1], -1e-12);
  }
}

// E_kappa[hbar(., v)] on a fine v grid using the reference formula.
double FineGridViolation(const BinSystem& sys, const std::vector<double>& weights,
                         const std::vector<double>& kappa, int points) {
  const int xis[] = {-2, -1, 1, 2};
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= points; ++i) {
    const double v = static_cast<double>(i) / points;
    double acc = 0.0;
    for (std::size_t k = 0; k < sys.theta_size(); ++k) {
      if (kappa[k] == 0.0) continue;
      const Bin& bin = sys.theta()[k];
      for (int x = 0; x < 4; ++x) {
        acc += kappa[k] * weights[4 * k + static_cast<std::size_t>(x)] *
               oracle::H(bin.r, bin.b, xis[x], sys.gamma(), v);
      }
    }
    worst = std::max(worst, acc);
  }
  return worst;
}

TEST(SolveKappa, SingleConstraintIsAvoided) {
  const BinSystem sys(0.1);
  const std::vector<double> vs = Breakpoints(sys);
  std::vector<double> w(NumConstraints(sys), 0.0);
  w[ConstraintId{5, Xi::kPlus1}.Index()] = 1.0;
  const KappaDist k = SolveKappa(MixedConstraint::Mix(sys, w), sys, vs);
  EXPECT_LE(k.objective, 1e-12);
  EXPECT_LE(k.max_violation, 1e-12);
}

TEST(SolveKappa, RandomWeightsAreFeasibleOnFineGrid) {
  std::mt19937_64 rng(12);
  std::exponential_distribution<double> ex(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double gamma : {0.3, 0.1}) {
    const BinSystem sys(gamma);
    const std::vector<double> vs = Breakpoints(sys);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> w(NumConstraints(sys));
      double total = 0.0;
      for (double& x : w) {
        // Sparse and heavy-tailed patterns as well as dense ones.
        x = trial % 3 == 0 ? (unit(rng) < 0.1 ? ex(rng) : 0.0) : std::pow(ex(rng), 3.0);
        total += x;
      }
      if (total == 0.0) {
        w[0] = 1.0;
        total = 1.0;
      }
      for (double& x : w) x /= total;
      const KappaDist k = SolveKappa(MixedConstraint::Mix(sys, w), sys, vs);
      double mass = 0.0;
      for (double p : k.prob) {
        EXPECT_GE(p, 0.0);
        mass += p;
      }
      EXPECT_NEAR(mass, 1.0, 1e-12);
      EXPECT_LE(k.max_violation, kFeasibilityTol);
      EXPECT_LE(FineGridViolation(sys, w, k.prob, 4000), kFeasibilityTol) << "trial " << trial;
    }
  }
}

TEST(SolveKappa, EmptyOutcomeSetIsDomainError) {
  const BinSystem sys(0.5);
  std::vector<double> w(NumConstraints(sys), 1.0 / static_cast<double>(NumConstraints(sys)));
  EXPECT_SWAPREG_ERROR(SolveKappa(MixedConstraint::Mix(sys, w), sys, std::vector<double>{}),
                       ErrorCode::kDomain);
}

TEST(MaxExpectedViolation, DirectSum) {
  DenseMatrix g(2, 2);
  g(0, 0) = 1.0;
  g(0, 1) = -1.0;
  g(1, 0) = 0.5;
  g(1, 1) = 0.25;
  EXPECT_DOUBLE_EQ(MaxExpectedViolation(g, std::vector<double>{0.5, 0.5}), 0.375);
}

}  // namespace
}  // namespace swapreg
