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

#include "swapreg/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {

int XiValue(Xi xi) {
  switch (xi) {
    case Xi::kMinus2:
      return -2;
    case Xi::kMinus1:
      return -1;
    case Xi::kPlus1:
      return 1;
    case Xi::kPlus2:
      return 2;
  }
  return 0;
}

double HOwn(const Bin& bin, double gamma, Xi xi, double v) {
  const double outer = 0.5 - gamma / (4.0 * bin.r);
  const double inner = 0.5 - gamma / (2.0 * bin.r);
  switch (xi) {
    case Xi::kPlus2:
      return (v > bin.b + 2.0 * bin.r ? 1.0 : 0.0) - outer;
    case Xi::kMinus2:
      return (v < bin.b - 2.0 * bin.r ? 1.0 : 0.0) - outer;
    case Xi::kPlus1:
      return inner - (v >= bin.b ? 1.0 : 0.0);
    case Xi::kMinus1:
      return inner - (v <= bin.b ? 1.0 : 0.0);
  }
  return 0.0;
}

double HEval(const BinSystem& sys, ConstraintId id, std::size_t theta_prime, double v) {
  if (theta_prime != id.theta) return 0.0;
  return HOwn(sys.theta()[id.theta], sys.gamma(), id.xi, v);
}

std::array<double, 4> ExpectedOwn(const Bin& bin, double gamma, const Dist01& phi) {
  const double outer = 0.5 - gamma / (4.0 * bin.r);
  const double inner = 0.5 - gamma / (2.0 * bin.r);
  std::array<double, 4> out{};
  out[static_cast<int>(Xi::kPlus2)] = phi.ProbGreater(bin.b + 2.0 * bin.r) - outer;
  out[static_cast<int>(Xi::kMinus2)] = phi.ProbLess(bin.b - 2.0 * bin.r) - outer;
  out[static_cast<int>(Xi::kPlus1)] = inner - phi.ProbGreaterEq(bin.b);
  out[static_cast<int>(Xi::kMinus1)] = inner - phi.ProbLessEq(bin.b);
  return out;
}

std::vector<double> Breakpoints(const BinSystem& sys) {
  std::vector<double> thresholds = {0.0, 1.0};
  for (const Bin& bin : sys.theta()) {
    thresholds.push_back(std::clamp(bin.b - 2.0 * bin.r, 0.0, 1.0));
    thresholds.push_back(bin.b);
    thresholds.push_back(std::clamp(bin.b + 2.0 * bin.r, 0.0, 1.0));
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<double> out;
  out.reserve(2 * thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    out.push_back(thresholds[i]);
    if (i + 1 < thresholds.size()) {
      out.push_back(0.5 * (thresholds[i] + thresholds[i + 1]));
    }
  }
  return out;
}

MixedConstraint MixedConstraint::Mix(const BinSystem& sys, std::span<const double> weights) {
  if (weights.size() != NumConstraints(sys)) {
    Fail(ErrorCode::kDomain, "expected " + std::to_string(NumConstraints(sys)) +
                                 " constraint weights, got " +
                                 std::to_string(weights.size()));
  }
  MixedConstraint out;
  out.w_.assign(sys.theta_size(), {0.0, 0.0, 0.0, 0.0});
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      Fail(ErrorCode::kDomain, "negative constraint weight at index " + std::to_string(i));
    }
    total += w;
    out.w_[i / 4][i % 4] = w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    Fail(ErrorCode::kDomain, "constraint weights must sum to 1, got " + std::to_string(total));
  }
  return out;
}

double MixedConstraint::Eval(const BinSystem& sys, std::size_t theta_prime, double v) const {
  const Bin& bin = sys.theta()[theta_prime];
  const auto& w = w_[theta_prime];
  double acc = 0.0;
  for (Xi xi : kAllXi) {
    const double wx = w[static_cast<int>(xi)];
    if (wx != 0.0) acc += wx * HOwn(bin, sys.gamma(), xi, v);
  }
  return acc;
}

}  // namespace swapreg
