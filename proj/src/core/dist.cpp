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

#include "swapreg/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {

Dist01::Dist01(std::vector<double> support, std::vector<double> mass)
    : support_(std::move(support)), mass_(std::move(mass)) {
  cdf_.resize(mass_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    acc += mass_[i];
    cdf_[i] = acc;
  }
  if (!cdf_.empty()) cdf_.back() = 1.0;
}

Dist01 Dist01::FromAtoms(std::vector<double> support, std::vector<double> mass,
                         bool renormalize) {
  if (support.size() != mass.size()) {
    Fail(ErrorCode::kValidation, "support and mass lengths differ");
  }
  if (support.empty()) Fail(ErrorCode::kValidation, "empty distribution");

  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!std::isfinite(support[i]) || support[i] < 0.0 || support[i] > 1.0) {
      Fail(ErrorCode::kValidation,
           "support point outside [0,1]: " + std::to_string(support[i]));
    }
    if (!std::isfinite(mass[i]) || mass[i] < 0.0) {
      Fail(ErrorCode::kValidation,
           "negative or non-finite mass: " + std::to_string(mass[i]));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support[a] < support[b];
  });

  std::vector<double> s;
  std::vector<double> m;
  s.reserve(order.size());
  m.reserve(order.size());
  double total = 0.0;
  for (std::size_t idx : order) {
    if (mass[idx] == 0.0) continue;
    total += mass[idx];
    if (!s.empty() && s.back() == support[idx]) {
      m.back() += mass[idx];
    } else {
      s.push_back(support[idx]);
      m.push_back(mass[idx]);
    }
  }
  if (s.empty() || std::abs(total - 1.0) > 1e-9) {
    Fail(ErrorCode::kValidation,
         "masses must sum to 1, got " + std::to_string(total));
  }
  if (renormalize && total != 1.0) {
    for (double& x : m) x /= total;
  }
  return Dist01(std::move(s), std::move(m));
}

Dist01 Dist01::PointMass(double v) { return FromAtoms({v}, {1.0}); }

double Dist01::ProbLess(double x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.begin()) return 0.0;
  return cdf_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double Dist01::ProbLessEq(double x) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), x);
  if (it == support_.begin()) return 0.0;
  return cdf_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

Interval QuantileSet(const Dist01& phi, double z, double level_tol) {
  auto cdf = phi.cdf();
  auto support = phi.support();
  Interval out;
  // min Q(z): first atom with Pr[v <= q] >= z.
  if (z - level_tol <= 0.0) {
    out.lo = 0.0;
  } else {
    auto it = std::lower_bound(cdf.begin(), cdf.end(), z - level_tol);
    if (it == cdf.end()) --it;
    out.lo = support[static_cast<std::size_t>(it - cdf.begin())];
  }
  // max Q(z): first atom with Pr[v <= q] > z, i.e. Pr[v < q] still <= z.
  if (z + level_tol >= 1.0) {
    out.hi = 1.0;
  } else {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), z + level_tol);
    if (it == cdf.end()) --it;
    out.hi = support[static_cast<std::size_t>(it - cdf.begin())];
  }
  return out;
}

WidthResult GammaWidth(const Dist01& phi, double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0) {
    Fail(ErrorCode::kDomain, "gamma must lie in (0,1], got " + std::to_string(gamma));
  }
  auto max_gap = [&](double w) {
    const double u = gamma / (2.0 * w);
    return QuantileSet(phi, 0.5 + u).hi - QuantileSet(phi, 0.5 - u).lo;
  };

  // {w : w <= max S(w)} is an interval starting at gamma; its supremum is the
  // width.
  double w = 1.0;
  if (!(1.0 <= max_gap(1.0))) {
    double lo = gamma;
    double hi = 1.0;
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= max_gap(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    w = lo;
  }

  const double u = gamma / (2.0 * w);
  const Interval lower = QuantileSet(phi, 0.5 - u, kWidthLevelTol);
  const Interval upper = QuantileSet(phi, 0.5 + u, kWidthLevelTol);
  constexpr double kTol = 1e-12;
  if (upper.lo - lower.hi > w + kTol || upper.hi - lower.lo < w - kTol) {
    Fail(ErrorCode::kInternal, "width fixed point lost: w=" + std::to_string(w));
  }

  WidthResult out;
  out.w = w;
  out.alpha = std::max(lower.lo, std::min(lower.hi, upper.hi - w));
  out.beta = out.alpha + w;
  if (out.beta > 1.0) {
    out.beta = 1.0;
    out.alpha = 1.0 - w;
  }
  return out;
}

Dist01 Mixture(std::span<const Dist01> dists, std::span<const double> weights) {
  if (dists.empty()) Fail(ErrorCode::kDomain, "mixture of an empty list");
  if (dists.size() != weights.size()) {
    Fail(ErrorCode::kDomain, "mixture weights and components differ in length");
  }
  double total = 0.0;
  for (double wt : weights) {
    if (!std::isfinite(wt) || wt < 0.0) Fail(ErrorCode::kDomain, "negative mixture weight");
    total += wt;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    Fail(ErrorCode::kDomain, "mixture weights must sum to 1");
  }
  std::vector<double> support;
  std::vector<double> mass;
  for (std::size_t k = 0; k < dists.size(); ++k) {
    if (weights[k] == 0.0) continue;
    for (std::size_t i = 0; i < dists[k].size(); ++i) {
      support.push_back(dists[k].support()[i]);
      mass.push_back(weights[k] * dists[k].mass()[i]);
    }
  }
  return Dist01::FromAtoms(std::move(support), std::move(mass));
}

double ExpectedAbs(const Dist01& phi, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    Fail(ErrorCode::kDomain, "evaluation point outside [0,1]: " + std::to_string(s));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    acc += phi.mass()[i] * std::abs(s - phi.support()[i]);
  }
  return acc;
}

BestResponse BestResponseOf(const Dist01& phi) {
  BestResponse out;
  out.point = QuantileSet(phi, 0.5).lo;
  out.value = ExpectedAbs(phi, out.point);
  return out;
}

double LeftWeightedMedian(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) Fail(ErrorCode::kDomain, "median of no atoms");
  std::sort(atoms.begin(), atoms.end());
  double total = 0.0;
  for (const auto& a : atoms) total += a.second;
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    acc += atoms[i].second;
    // Merge equal points before testing so the comparison sees the full step.
    if (i + 1 < atoms.size() && atoms[i + 1].first == atoms[i].first) continue;
    if (2.0 * acc >= total) return atoms[i].first;
  }
  return atoms.back().first;
}

}  // namespace swapreg
