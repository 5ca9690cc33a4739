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

#ifndef SWAPREG_CONSTRAINTS_HPP_
#define SWAPREG_CONSTRAINTS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "swapreg/binning.hpp"
#include "swapreg/dist.hpp"

namespace swapreg {

// The four constraint families attached to every bin.
//   kPlus2:  Pr[v > b + 2r] <= 1/2 - gamma/4r
//   kMinus2: Pr[v < b - 2r] <= 1/2 - gamma/4r
//   kPlus1:  Pr[v >= b]     >= 1/2 - gamma/2r
//   kMinus1: Pr[v <= b]     >= 1/2 - gamma/2r
enum class Xi : int { kMinus2 = 0, kMinus1 = 1, kPlus1 = 2, kPlus2 = 3 };

inline constexpr std::array<Xi, 4> kAllXi = {Xi::kMinus2, Xi::kMinus1, Xi::kPlus1,
                                             Xi::kPlus2};

int XiValue(Xi xi);

struct ConstraintId {
  std::size_t theta = 0;
  Xi xi = Xi::kPlus1;

  // Dense index 4 * theta + xi used by the expert algorithm.
  std::size_t Index() const { return 4 * theta + static_cast<std::size_t>(xi); }
  static ConstraintId FromIndex(std::size_t index) {
    return {index / 4, static_cast<Xi>(index % 4)};
  }
};

inline std::size_t NumConstraints(const BinSystem& sys) { return 4 * sys.theta_size(); }

// h_{theta,xi}(theta, v): the value on the constraint's own bin.
double HOwn(const Bin& bin, double gamma, Xi xi, double v);

// h_{id}(theta_prime, v); zero unless theta_prime is the constraint's bin.
double HEval(const BinSystem& sys, ConstraintId id, std::size_t theta_prime, double v);

// E_{v~phi} h_{theta,xi}(theta, v) for the four xi, indexed by Xi.
std::array<double, 4> ExpectedOwn(const Bin& bin, double gamma, const Dist01& phi);

// Finite set of outcome values on which every mixture of constraints takes
// all of its values: 0, 1, each clamped threshold b - 2r, b, b + 2r, and the
// midpoints between consecutive thresholds.
std::vector<double> Breakpoints(const BinSystem& sys);

// Convex combination of the constraints, grouped by bin.
class MixedConstraint {
 public:
  // weights has one entry per ConstraintId::Index(). Throws kDomain on a
  // negative or non-finite weight or a total off one by more than 1e-9.
  static MixedConstraint Mix(const BinSystem& sys, std::span<const double> weights);

  // hbar(theta_prime, v); touches only the four weights of theta_prime.
  double Eval(const BinSystem& sys, std::size_t theta_prime, double v) const;

  const std::array<double, 4>& weights_of(std::size_t theta) const { return w_[theta]; }
  std::size_t theta_size() const { return w_.size(); }

 private:
  std::vector<std::array<double, 4>> w_;
};

}  // namespace swapreg

#endif  // SWAPREG_CONSTRAINTS_HPP_
