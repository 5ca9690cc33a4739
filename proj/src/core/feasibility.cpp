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

#include "swapreg/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {
namespace {

// hbar takes values in [-1, 1]; this shift makes every entry at least 1.
constexpr double kShift = 2.0;

// Rows of g that can bind: duplicates and rows dominated entrywise by another
// row are implied once x >= 0, and dropping them removes most of the
// degeneracy the raw outcome grid produces.
std::vector<std::size_t> UsefulRows(const DenseMatrix& g) {
  std::vector<std::size_t> order(g.rows);
  for (std::size_t i = 0; i < g.rows; ++i) order[i] = i;
  const auto row = [&g](std::size_t i) { return &g.data[i * g.cols]; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + g.cols, row(b), row(b) + g.cols);
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) {
                            return std::equal(row(a), row(a) + g.cols, row(b));
                          }),
              order.end());
  std::vector<std::size_t> keep;
  for (std::size_t a : order) {
    bool dominated = false;
    for (std::size_t b : order) {
      if (a == b) continue;
      const double* ra = row(a);
      const double* rb = row(b);
      std::size_t k = 0;
      while (k < g.cols && rb[k] >= ra[k]) ++k;
      if (k == g.cols) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(a);
  }
  return keep;
}

}  // namespace

DenseMatrix ConstraintMatrix(const MixedConstraint& hbar, const BinSystem& sys,
                             std::span<const double> v_set) {
  DenseMatrix g(v_set.size(), sys.theta_size());
  for (std::size_t k = 0; k < sys.theta_size(); ++k) {
    const auto& w = hbar.weights_of(k);
    if (w[0] == 0.0 && w[1] == 0.0 && w[2] == 0.0 && w[3] == 0.0) continue;
    for (std::size_t i = 0; i < v_set.size(); ++i) {
      g(i, k) = hbar.Eval(sys, k, v_set[i]);
    }
  }
  return g;
}

double MaxExpectedViolation(const DenseMatrix& g, std::span<const double> kappa) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g.cols; ++k) acc += kappa[k] * g(i, k);
    worst = std::max(worst, acc);
  }
  return worst;
}

KappaDist SolveKappa(const MixedConstraint& hbar, const BinSystem& sys,
                     std::span<const double> v_set, std::size_t max_pivots) {
  if (v_set.empty()) Fail(ErrorCode::kDomain, "empty outcome set");
  const DenseMatrix g = ConstraintMatrix(hbar, sys, v_set);

  const std::vector<std::size_t> rows = UsefulRows(g);
  DenseMatrix shifted(rows.size(), g.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < g.cols; ++k) shifted(i, k) = g(rows[i], k) + kShift;
  }
  const std::vector<double> ones_rows(rows.size(), 1.0);
  const std::vector<double> ones_cols(g.cols, 1.0);
  const LpSolution lp = MaximizeStandardForm(shifted, ones_rows, ones_cols, max_pivots);
  if (!(lp.objective > 0.0)) Fail(ErrorCode::kSolver, "degenerate LP optimum");

  KappaDist out;
  out.prob.resize(g.cols);
  double total = 0.0;
  for (std::size_t k = 0; k < g.cols; ++k) {
    out.prob[k] = std::max(lp.x[k], 0.0);
    total += out.prob[k];
  }
  for (double& p : out.prob) p /= total;
  out.objective = 1.0 / lp.objective - kShift;
  out.pivots = lp.pivots;
  out.max_violation = MaxExpectedViolation(g, out.prob);
  if (out.max_violation > kFeasibilityTol) {
    Fail(ErrorCode::kSolver, "kappa violates a constraint by " +
                                 std::to_string(out.max_violation));
  }
  return out;
}

}  // namespace swapreg
