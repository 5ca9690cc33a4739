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

#ifndef SWAPREG_DIST_HPP_
#define SWAPREG_DIST_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace swapreg {

// Closed interval [lo, hi]; lo == hi for a single point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
};

// Finitely supported probability distribution on [0,1]. Support is strictly
// increasing, every mass is positive, and the masses sum to one.
class Dist01 {
 public:
  // Sorts the atoms, merges equal support points, drops zero masses and
  // renormalizes. Throws kValidation if a point leaves [0,1], a mass is
  // negative or non-finite, or the total differs from one by more than 1e-9.
  // Pass renormalize = false to keep stored masses bit-exact on reload.
  static Dist01 FromAtoms(std::vector<double> support, std::vector<double> mass,
                          bool renormalize = true);
  static Dist01 PointMass(double v);

  std::span<const double> support() const { return support_; }
  std::span<const double> mass() const { return mass_; }
  // cdf()[i] = Pr[v <= support()[i]]; the last entry is exactly 1.
  std::span<const double> cdf() const { return cdf_; }
  std::size_t size() const { return support_.size(); }

  double ProbLess(double x) const;
  double ProbLessEq(double x) const;
  double ProbGreater(double x) const { return 1.0 - ProbLessEq(x); }
  double ProbGreaterEq(double x) const { return 1.0 - ProbLess(x); }

 private:
  Dist01(std::vector<double> support, std::vector<double> mass);

  std::vector<double> support_;
  std::vector<double> mass_;
  std::vector<double> cdf_;
};

// The set {q : Pr[v < q] <= z and Pr[v <= q] >= z}, read off the CDF steps.
// A positive level_tol returns the union of the sets over levels within
// level_tol of z.
Interval QuantileSet(const Dist01& phi, double z, double level_tol = 0.0);

// gamma-width of phi: the unique w in [gamma, 1] with
// w in Q(1/2 + gamma/2w) - Q(1/2 - gamma/2w), and witnesses alpha, beta.
struct WidthResult {
  double w = 1.0;
  double alpha = 0.0;
  double beta = 1.0;
};

// Quantile levels at a width are matched against CDF values up to this
// tolerance when extracting witnesses. A fixed point that sits on a jump of
// the CDF is generally not representable as a double.
inline constexpr double kWidthLevelTol = 1e-13;

WidthResult GammaWidth(const Dist01& phi, double gamma);

Dist01 Mixture(std::span<const Dist01> dists, std::span<const double> weights);

// sum_i mass_i * |s - support_i|
double ExpectedAbs(const Dist01& phi, double s);

struct BestResponse {
  double point = 0.0;
  double value = 0.0;
};

// Left endpoint of the median interval and its expected absolute deviation.
BestResponse BestResponseOf(const Dist01& phi);

// Left median of unnormalized weighted atoms: the smallest atom whose
// cumulative weight reaches half the total. Atoms need not be sorted.
double LeftWeightedMedian(std::vector<std::pair<double, double>> atoms);

}  // namespace swapreg

#endif  // SWAPREG_DIST_HPP_
