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

#ifndef SWAPREG_LOSSES_HPP_
#define SWAPREG_LOSSES_HPP_

#include <span>
#include <vector>

#include "swapreg/dist.hpp"

namespace swapreg {

// Piecewise-linear convex 1-Lipschitz loss on [0,1].
//
// breakpoints run strictly increasing from 0 to 1, slopes[i] is the slope on
// [breakpoints[i], breakpoints[i+1]], and slopes are non-decreasing in [-1,1].
class PLConvexLoss {
 public:
  // Throws kValidation on any broken invariant. Slopes may exceed the unit
  // interval or decrease by at most 1e-12 (rounding slack); they are clipped.
  PLConvexLoss(std::vector<double> breakpoints, std::vector<double> slopes,
               double value_at_zero);

  // |p - v|
  static PLConvexLoss VShape(double v);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> slopes() const { return slopes_; }
  double value_at_zero() const { return value_at_zero_; }

  // Loss at p in [0,1]; throws kDomain outside.
  double operator()(double p) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  // values_[i] is the loss at breakpoints_[i].
  std::vector<double> values_;
  double value_at_zero_;
};

// l(p) = E_{v~phi} |p - v| + offset.
struct VMixture {
  Dist01 phi;
  double offset = 0.0;

  double operator()(double p) const { return ExpectedAbs(phi, p) + offset; }
};

// Atoms at interior breakpoints carry half the slope jump; the endpoints carry
// (s_first + 1)/2 and (1 - s_last)/2.
VMixture VShapeDecompose(const PLConvexLoss& loss);

enum class ScoringKind { kMedian, kMean, kQuantile };

struct ScoringRule {
  ScoringKind kind = ScoringKind::kMedian;
  double q = 0.5;  // only read for kQuantile

  static ScoringRule Median() { return {ScoringKind::kMedian, 0.5}; }
  static ScoringRule Mean() { return {ScoringKind::kMean, 0.5}; }
  static ScoringRule Quantile(double q);
};

// Grid step of the chordal approximation used for the mean rule.
inline constexpr double kMeanChordStep = 1.0 / 64.0;

// S(., y) as a loss in p. The mean rule returns (p - y)^2 / 2 linearized on a
// grid of step 1/64; the quantile rule is the pinball loss with slope -q below
// y and 1 - q above.
PLConvexLoss ScoringLoss(const ScoringRule& rule, double y);

// Exact S(p, y) (the mean rule here is the unscaled (p - y)^2).
double ScoreValue(const ScoringRule& rule, double p, double y);

}  // namespace swapreg

#endif  // SWAPREG_LOSSES_HPP_
