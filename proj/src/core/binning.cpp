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

#include "swapreg/binning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {
namespace {

constexpr double kGridTol = 1e-12;

}  // namespace

BinSystem::BinSystem(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || gamma > 1.0) {
    Fail(ErrorCode::kDomain, "gamma must lie in (0,1], got " + std::to_string(gamma));
  }
  for (double r = gamma; r <= 1.0 + kGridTol; r *= 2.0) {
    scales_.push_back(std::min(r, 1.0));
  }
  bins_.resize(scales_.size());
  offsets_.resize(scales_.size());
  for (std::size_t k = 0; k < scales_.size(); ++k) {
    const double r = scales_[k];
    offsets_[k] = theta_.size();
    // Each grid point is j * r from the integer index, never accumulated.
    for (std::size_t j = 0;; ++j) {
      const double b = static_cast<double>(j) * r;
      if (b > 1.0 + kGridTol) break;
      bins_[k].push_back(std::min(b, 1.0));
      theta_.push_back(Bin{k, j, r, bins_[k].back()});
    }
  }
}

std::size_t BinSystem::ScaleFor(double w) const {
  // Largest scale not exceeding w; the top scale absorbs w up to 1 because
  // twice the top scale exceeds 1.
  std::size_t k = 0;
  while (k + 1 < scales_.size() && scales_[k + 1] <= w + kGridTol) ++k;
  return k;
}

std::size_t BinSystem::Locate(const WidthResult& wr) const {
  const std::size_t k = ScaleFor(wr.w);
  const double r = scales_[k];
  const auto& grid = bins_[k];
  // Prefer a point inside [alpha, beta] exactly; fall back to the rounding
  // slack only when the interval is a hair shorter than the scale.
  auto it = std::lower_bound(grid.begin(), grid.end(), wr.alpha);
  if (it == grid.end() || *it > wr.beta) {
    it = std::lower_bound(grid.begin(), grid.end(), wr.alpha - kGridTol);
  }
  if (it == grid.end() || *it > wr.beta + kGridTol) {
    Fail(ErrorCode::kInternal,
         "no grid point of scale " + std::to_string(r) + " inside [" +
             std::to_string(wr.alpha) + ", " + std::to_string(wr.beta) + "]");
  }
  return ThetaIndex(k, static_cast<std::size_t>(it - grid.begin()));
}

}  // namespace swapreg
