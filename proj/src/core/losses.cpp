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

#include "swapreg/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {
namespace {

constexpr double kSlopeSlack = 1e-12;

}  // namespace

PLConvexLoss::PLConvexLoss(std::vector<double> breakpoints,
                           std::vector<double> slopes, double value_at_zero)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      value_at_zero_(value_at_zero) {
  if (breakpoints_.size() < 2) {
    Fail(ErrorCode::kValidation, "a loss needs at least the breakpoints 0 and 1");
  }
  if (slopes_.size() + 1 != breakpoints_.size()) {
    Fail(ErrorCode::kValidation, "need exactly one slope per segment");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    Fail(ErrorCode::kValidation, "breakpoints must start at 0 and end at 1");
  }
  if (!std::isfinite(value_at_zero_)) {
    Fail(ErrorCode::kValidation, "value at zero is not finite");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      Fail(ErrorCode::kValidation, "breakpoints must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    double& s = slopes_[i];
    if (!std::isfinite(s) || s < -1.0 - kSlopeSlack || s > 1.0 + kSlopeSlack) {
      Fail(ErrorCode::kValidation, "slope outside [-1,1]: " + std::to_string(s));
    }
    s = std::clamp(s, -1.0, 1.0);
    if (i > 0) {
      if (s < slopes_[i - 1] - kSlopeSlack) {
        Fail(ErrorCode::kValidation, "slopes must be non-decreasing (convexity)");
      }
      s = std::max(s, slopes_[i - 1]);
    }
  }
  values_.resize(breakpoints_.size());
  values_[0] = value_at_zero_;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    values_[i + 1] = values_[i] + slopes_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
}

PLConvexLoss PLConvexLoss::VShape(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    Fail(ErrorCode::kDomain, "V apex outside [0,1]: " + std::to_string(v));
  }
  if (v == 0.0) return PLConvexLoss({0.0, 1.0}, {1.0}, 0.0);
  if (v == 1.0) return PLConvexLoss({0.0, 1.0}, {-1.0}, 1.0);
  return PLConvexLoss({0.0, v, 1.0}, {-1.0, 1.0}, v);
}

double PLConvexLoss::operator()(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kDomain, "loss evaluated outside [0,1]: " + std::to_string(p));
  }
  // Segment i covers [breakpoints_[i], breakpoints_[i+1]].
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), p);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  i = std::min(i == 0 ? 0 : i - 1, slopes_.size() - 1);
  return values_[i] + slopes_[i] * (p - breakpoints_[i]);
}

VMixture VShapeDecompose(const PLConvexLoss& loss) {
  auto bp = loss.breakpoints();
  auto sl = loss.slopes();
  const std::size_t k = sl.size();

  std::vector<double> support;
  std::vector<double> mass;
  support.reserve(k + 1);
  mass.reserve(k + 1);
  // CDF of phi is (slope + 1)/2 with the right-continuous subgradient and the
  // convention that the subgradient at 1 is 1.
  support.push_back(0.0);
  mass.push_back((sl[0] + 1.0) / 2.0);
  for (std::size_t i = 1; i < k; ++i) {
    support.push_back(bp[i]);
    mass.push_back((sl[i] - sl[i - 1]) / 2.0);
  }
  support.push_back(1.0);
  mass.push_back((1.0 - sl[k - 1]) / 2.0);

  VMixture out{Dist01::FromAtoms(std::move(support), std::move(mass)), 0.0};
  out.offset = (loss(0.0) + loss(1.0) - 1.0) / 2.0;
  return out;
}

ScoringRule ScoringRule::Quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    Fail(ErrorCode::kDomain, "quantile level must lie in (0,1): " + std::to_string(q));
  }
  return {ScoringKind::kQuantile, q};
}

PLConvexLoss ScoringLoss(const ScoringRule& rule, double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    Fail(ErrorCode::kDomain, "outcome outside [0,1]: " + std::to_string(y));
  }
  switch (rule.kind) {
    case ScoringKind::kMedian:
      return PLConvexLoss::VShape(y);
    case ScoringKind::kQuantile: {
      const double q = rule.q;
      if (!(q > 0.0 && q < 1.0)) Fail(ErrorCode::kDomain, "quantile level must lie in (0,1)");
      if (y == 0.0) return PLConvexLoss({0.0, 1.0}, {1.0 - q}, 0.0);
      if (y == 1.0) return PLConvexLoss({0.0, 1.0}, {-q}, q);
      return PLConvexLoss({0.0, y, 1.0}, {-q, 1.0 - q}, q * y);
    }
    case ScoringKind::kMean: {
      const int n = static_cast<int>(std::lround(1.0 / kMeanChordStep));
      std::vector<double> bp(static_cast<std::size_t>(n) + 1);
      std::vector<double> sl(static_cast<std::size_t>(n));
      for (int j = 0; j <= n; ++j) bp[static_cast<std::size_t>(j)] = static_cast<double>(j) / n;
      for (int j = 0; j < n; ++j) {
        const double a = bp[static_cast<std::size_t>(j)];
        const double b = bp[static_cast<std::size_t>(j) + 1];
        const double chord = ((b - y) * (b - y) - (a - y) * (a - y)) / (2.0 * (b - a));
        sl[static_cast<std::size_t>(j)] = std::clamp(chord, -1.0, 1.0);
      }
      return PLConvexLoss(std::move(bp), std::move(sl), y * y / 2.0);
    }
  }
  Fail(ErrorCode::kInternal, "unknown scoring rule");
}

double ScoreValue(const ScoringRule& rule, double p, double y) {
  switch (rule.kind) {
    case ScoringKind::kMedian:
      return std::abs(p - y);
    case ScoringKind::kMean:
      return (p - y) * (p - y);
    case ScoringKind::kQuantile:
      return p <= y ? rule.q * (y - p) : (1.0 - rule.q) * (p - y);
  }
  return 0.0;
}

}  // namespace swapreg
