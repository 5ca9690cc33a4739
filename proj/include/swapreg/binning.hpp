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

#ifndef SWAPREG_BINNING_HPP_
#define SWAPREG_BINNING_HPP_

#include <cstddef>
#include <vector>

#include "swapreg/dist.hpp"

namespace swapreg {

// One element of Theta: bin value b on the grid of scale r.
struct Bin {
  std::size_t scale_index = 0;
  std::size_t slot = 0;  // b = slot * r
  double r = 0.0;
  double b = 0.0;

  friend bool operator==(const Bin&, const Bin&) = default;
};

// Multi-scale bins: scales r = gamma * 2^k <= 1 and, per scale, the grid
// {0, r, 2r, ...} within [0,1]. Theta lists every (r, b) pair, scale-major.
class BinSystem {
 public:
  // Throws kDomain unless gamma in (0,1].
  explicit BinSystem(double gamma);

  double gamma() const { return gamma_; }
  const std::vector<double>& scales() const { return scales_; }
  const std::vector<double>& bins(std::size_t scale_index) const {
    return bins_[scale_index];
  }
  const std::vector<Bin>& theta() const { return theta_; }
  std::size_t theta_size() const { return theta_.size(); }
  // Index into theta() of (scale_index, slot).
  std::size_t ThetaIndex(std::size_t scale_index, std::size_t slot) const {
    return offsets_[scale_index] + slot;
  }

  // Index of the unique scale with w in [r, 2r).
  std::size_t ScaleFor(double w) const;

  // The truthful bin for a width result: the scale containing w and the
  // smallest grid point of that scale inside [alpha, beta]. Returns an index
  // into theta(). Throws kInternal if no grid point fits.
  std::size_t Locate(const WidthResult& wr) const;

 private:
  double gamma_;
  std::vector<double> scales_;
  std::vector<std::vector<double>> bins_;
  std::vector<std::size_t> offsets_;
  std::vector<Bin> theta_;
};

}  // namespace swapreg

#endif  // SWAPREG_BINNING_HPP_
