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

#ifndef SWAPREG_FEASIBILITY_HPP_
#define SWAPREG_FEASIBILITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "swapreg/binning.hpp"
#include "swapreg/constraints.hpp"
#include "swapreg/simplex.hpp"

namespace swapreg {

inline constexpr double kFeasibilityTol = 1e-7;

// Distribution over Theta, dense.
struct KappaDist {
  std::vector<double> prob;
  // LP optimum: min over kappa of max over v of E_kappa[hbar(., v)].
  double objective = 0.0;
  // The same quantity re-evaluated by direct summation at the returned kappa.
  double max_violation = 0.0;
  std::size_t pivots = 0;
};

// The matrix G(v, theta) = hbar(theta, v) over v in V.
DenseMatrix ConstraintMatrix(const MixedConstraint& hbar, const BinSystem& sys,
                             std::span<const double> v_set);

// max_v sum_theta kappa_theta G(v, theta), computed directly.
double MaxExpectedViolation(const DenseMatrix& g, std::span<const double> kappa);

// Finds kappa with E_kappa[hbar(., v)] <= 0 for every v in V by solving
//   minimize t  s.t.  sum_theta kappa_theta hbar(theta, v) <= t  (v in V),
//                     kappa in the simplex.
// Internally the game matrix is shifted to be positive and solved as
// max 1.x s.t. (G + 2) x <= 1, x >= 0, with kappa = x / sum(x). Throws
// kSolver if the pivot cap is hit or the post-check exceeds 1e-7.
KappaDist SolveKappa(const MixedConstraint& hbar, const BinSystem& sys,
                     std::span<const double> v_set,
                     std::size_t max_pivots = kDefaultPivotCap);

}  // namespace swapreg

#endif  // SWAPREG_FEASIBILITY_HPP_
