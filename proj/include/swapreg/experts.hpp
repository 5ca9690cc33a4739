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

#ifndef SWAPREG_EXPERTS_HPP_
#define SWAPREG_EXPERTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swapreg {

// Multi-scale multiplicative weights with correction over N experts.
//
// Each expert i is split into sub-experts (i, j), one per learning rate
// eta_j = 2^-j / 32, j = 0..ceil(log2 T). The prior is proportional to
// eta_j^2 and uniform over i. A round with losses c_i = -u_i multiplies
// sub-expert (i, j) by exp(-eta_j (c_i + eta_j c_i^2) - eta_j lambda), where
// lambda is the unique root that renormalizes the weights. Weights are kept
// in the log domain.
class ExpertState {
 public:
  ExpertState(std::size_t n_experts, std::uint64_t horizon);
  // Explicit rate grid; every rate must lie in (0, 1/32].
  ExpertState(std::size_t n_experts, std::vector<double> rates);

  std::size_t num_experts() const { return n_; }
  const std::vector<double>& rates() const { return rates_; }
  std::uint64_t round() const { return round_; }

  // Marginal weights over experts: W_i = sum_j w(i, j).
  std::vector<double> Weights() const;
  void WeightsInto(std::span<double> out) const;

  // Sub-expert weight w(i, j).
  double SubWeight(std::size_t expert, std::size_t rate) const;

  // Rewards must lie in [-1, 1] (kDomain otherwise).
  void Update(std::span<const double> rewards);

 private:
  void InitPrior();

  std::size_t n_;
  std::vector<double> rates_;
  // log w(i, j) at [i * rates_.size() + j].
  std::vector<double> log_w_;
  std::uint64_t round_ = 0;
};

}  // namespace swapreg

#endif  // SWAPREG_EXPERTS_HPP_
