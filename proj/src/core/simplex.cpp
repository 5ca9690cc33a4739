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

#include "swapreg/simplex.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {
namespace {

constexpr double kReducedCostEps = 1e-11;
constexpr double kPivotTol = 1e-9;
constexpr double kHarrisTol = 1e-9;
constexpr double kRayTol = 1e-9;
constexpr double kDegenerateRhs = 1e-12;

}  // namespace

LpSolution MaximizeStandardForm(const DenseMatrix& a, std::span<const double> b,
                                std::span<const double> c, std::size_t max_pivots) {
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  if (b.size() != m || c.size() != n) Fail(ErrorCode::kDomain, "LP dimension mismatch");
  for (double bi : b) {
    if (bi < 0.0) Fail(ErrorCode::kDomain, "LP right-hand side must be nonnegative");
  }

  // Row i reads: basic_i = t(i, n) - sum_j t(i, j) * nonbasic_j. Row m holds
  // the objective as z = t(m, n) - sum_j t(m, j) * nonbasic_j.
  const std::size_t w = n + 1;
  std::vector<double> t((m + 1) * w);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * w + j] = a(i, j);
    t[i * w + n] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m * w + j] = -c[j];
  t[m * w + n] = 0.0;

  // Labels: 0..n-1 are the structural variables, n..n+m-1 the slacks.
  std::vector<std::size_t> nonbasic(n);
  std::vector<std::size_t> basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

  const std::size_t bland_after = 2 * (m + n);
  std::size_t degenerate_run = 0;
  bool bland = false;
  std::vector<bool> skipped(n, false);
  std::size_t pivots = 0;
  for (;;) {
    // Once switched, stay with Bland's rule so the solve must terminate.
    bland = bland || degenerate_run > bland_after;
    std::fill(skipped.begin(), skipped.end(), false);
    std::size_t s = n;
    std::size_t r = m;
    for (;;) {
      std::size_t cand = n;
      for (std::size_t j = 0; j < n; ++j) {
        const double rc = t[m * w + j];
        if (skipped[j] || rc >= -kReducedCostEps) continue;
        if (cand == n || (bland ? nonbasic[j] < nonbasic[cand] : rc < t[m * w + cand])) {
          cand = j;
        }
      }
      if (cand == n) break;

      if (bland) {
        // Textbook minimum ratio, ties to the smallest basic label.
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
          const double coef = t[i * w + cand];
          if (coef <= kPivotTol) continue;
          const double ratio = std::max(t[i * w + n], 0.0) / coef;
          if (ratio < best || (ratio == best && basic[i] < basic[r])) {
            best = ratio;
            r = i;
          }
        }
      } else {
        // Pass 1: the step length allowed when every basic value may dip
        // kHarrisTol below zero. Pass 2: the largest pivot within that step.
        // Rounding can leave a basic value a hair below zero, hence the clamp.
        double limit = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
          const double coef = t[i * w + cand];
          if (coef > kPivotTol) {
            limit = std::min(limit, (std::max(t[i * w + n], 0.0) + kHarrisTol) / coef);
          }
        }
        double best_pivot = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double coef = t[i * w + cand];
          if (coef <= kPivotTol || std::max(t[i * w + n], 0.0) / coef > limit) continue;
          if (coef > best_pivot) {
            best_pivot = coef;
            r = i;
          }
        }
      }
      if (r != m) {
        s = cand;
        break;
      }
      // No usable pivot: a ray unless the reduced cost is rounding noise.
      if (t[m * w + cand] < -kRayTol) Fail(ErrorCode::kSolver, "LP is unbounded");
      skipped[cand] = true;
    }
    if (s == n) break;
    if (++pivots > max_pivots) {
      Fail(ErrorCode::kSolver, "pivot cap of " + std::to_string(max_pivots) + " exceeded");
    }
    degenerate_run = t[r * w + n] <= kDegenerateRhs ? degenerate_run + 1 : 0;

    const double p = t[r * w + s];
    const double inv = 1.0 / p;
    double* row_r = &t[r * w];
    for (std::size_t j = 0; j < w; ++j) {
      if (j != s) row_r[j] *= inv;
    }
    row_r[s] = inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      double* row_i = &t[i * w];
      const double factor = row_i[s];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) {
        if (j != s) row_i[j] -= factor * row_r[j];
      }
      row_i[s] = -factor * inv;
    }
    std::swap(nonbasic[s], basic[r]);
  }

  LpSolution out;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < n) out.x[basic[i]] = t[i * w + n];
  }
  out.objective = t[m * w + n];
  out.pivots = pivots;
  return out;
}

}  // namespace swapreg
