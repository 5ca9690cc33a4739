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

#ifndef SWAPREG_SIMPLEX_HPP_
#define SWAPREG_SIMPLEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace swapreg {

// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t pivots = 0;
};

inline constexpr std::size_t kDefaultPivotCap = 100000;

// maximize c.x  subject to  A x <= b, x >= 0, with b >= 0 so the slack basis
// is feasible. Condensed tableau with most-negative-reduced-cost pricing and
// a two-pass (Harris) ratio test that prefers large pivots; after a long run
// of degenerate pivots it switches to Bland's rule so it cannot cycle.
// Throws kSolver when the problem is unbounded or the pivot cap is hit,
// kDomain if some b < 0.
LpSolution MaximizeStandardForm(const DenseMatrix& a, std::span<const double> b,
                                std::span<const double> c,
                                std::size_t max_pivots = kDefaultPivotCap);

}  // namespace swapreg

#endif  // SWAPREG_SIMPLEX_HPP_
