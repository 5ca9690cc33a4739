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

// Reference implementations used only by the tests. They recompute the
// library's quantities from definitions, by brute force where that is
// cheap, and share no code with src/.

#ifndef SWAPREG_TESTS_ORACLES_HPP_
#define SWAPREG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace swapreg::oracle {

struct Atoms {
  std::vector<double> v;
  std::vector<double> m;
};

inline double ProbLess(const Atoms& a, double q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) acc += a.v[i] < q ? a.m[i] : 0.0;
  return acc;
}

inline double ProbLessEq(const Atoms& a, double q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) acc += a.v[i] <= q ? a.m[i] : 0.0;
  return acc;
}

// q is a z-quantile iff Pr[v < q] <= z <= Pr[v <= q]. level_tol widens z.
inline bool IsQuantile(const Atoms& a, double q, double z, double level_tol = 0.0) {
  return ProbLess(a, q) <= z + level_tol && ProbLessEq(a, q) >= z - level_tol;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool empty() const { return lo > hi; }
};

// The endpoints of a quantile set lie in support + {0, 1}, so scanning those
// candidates finds the set exactly.
inline Range QuantileRange(const Atoms& a, double z, double level_tol = 0.0) {
  std::vector<double> cand = a.v;
  cand.push_back(0.0);
  cand.push_back(1.0);
  Range r;
  for (double q : cand) {
    if (IsQuantile(a, q, z, level_tol)) {
      r.lo = std::min(r.lo, q);
      r.hi = std::max(r.hi, q);
    }
  }
  return r;
}

// w in Q(1/2 + g/2w) - Q(1/2 - g/2w) (Minkowski difference of intervals).
inline bool WidthMember(const Atoms& a, double gamma, double w, double level_tol = 0.0,
                        double tol = 0.0) {
  const double u = gamma / (2.0 * w);
  const Range lower = QuantileRange(a, 0.5 - u, level_tol);
  const Range upper = QuantileRange(a, 0.5 + u, level_tol);
  if (lower.empty() || upper.empty()) return false;
  return w >= upper.lo - lower.hi - tol && w <= upper.hi - lower.lo + tol;
}

inline double ExpectedAbs(const Atoms& a, double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) acc += a.m[i] * std::abs(s - a.v[i]);
  return acc;
}

// h_{r,b,xi}(r,b,v) with xi in {-2,-1,+1,+2}.
inline double H(double r, double b, int xi, double gamma, double v) {
  switch (xi) {
    case 2:
      return (v > b + 2 * r ? 1.0 : 0.0) - (0.5 - gamma / (4 * r));
    case -2:
      return (v < b - 2 * r ? 1.0 : 0.0) - (0.5 - gamma / (4 * r));
    case 1:
      return (0.5 - gamma / (2 * r)) - (v >= b ? 1.0 : 0.0);
    case -1:
      return (0.5 - gamma / (2 * r)) - (v <= b ? 1.0 : 0.0);
  }
  return 0.0;
}

// Piecewise-linear loss from breakpoints/slopes/value at 0, evaluated by
// summing whole segments left of p.
inline double EvalPL(const std::vector<double>& x, const std::vector<double>& s, double at_zero,
                     double p) {
  double val = at_zero;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double right = std::min(p, x[i + 1]);
    if (right <= x[i]) break;
    val += s[i] * (right - x[i]);
  }
  return val;
}

struct RandomPL {
  std::vector<double> x;
  std::vector<double> s;
  double at_zero = 0.0;
};

inline RandomPL MakeRandomPL(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> segs(1, 7);
  RandomPL out;
  const int k = segs(rng);
  out.x.push_back(0.0);
  std::vector<double> cuts;
  for (int i = 1; i < k; ++i) cuts.push_back(unit(rng));
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts) {
    if (c > out.x.back() + 1e-9 && c < 1.0 - 1e-9) out.x.push_back(c);
  }
  out.x.push_back(1.0);
  for (std::size_t i = 0; i + 1 < out.x.size(); ++i) out.s.push_back(2.0 * unit(rng) - 1.0);
  std::sort(out.s.begin(), out.s.end());
  out.at_zero = 2.0 * unit(rng);
  return out;
}

// Random finite distribution; with grid_step > 0 the support sits on that
// grid, which produces ties with bin edges and quantile levels.
inline Atoms MakeRandomAtoms(std::mt19937_64& rng, std::size_t max_atoms = 8,
                             double grid_step = 0.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  const std::size_t n = count(rng);
  Atoms a;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = unit(rng);
    if (grid_step > 0.0) v = std::round(v / grid_step) * grid_step;
    a.v.push_back(std::min(1.0, std::max(0.0, v)));
    const double m = 0.05 + unit(rng);
    a.m.push_back(m);
    total += m;
  }
  for (double& m : a.m) m /= total;
  return a;
}

// Exhaustive swap regret: every map sigma from the distinct predictions to
// the candidate set, scored over the whole transcript.
inline double BruteSwapRegret(const std::vector<double>& p, const std::vector<Atoms>& losses,
                              const std::vector<double>& candidates) {
  std::vector<double> distinct = p;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> choice(distinct.size(), 0);
  double played = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) played += ExpectedAbs(losses[t], p[t]);

  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    double cost = 0.0;
    for (std::size_t t = 0; t < p.size(); ++t) {
      const auto k = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), p[t]) - distinct.begin());
      cost += ExpectedAbs(losses[t], candidates[choice[k]]);
    }
    best = std::min(best, cost);
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == candidates.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  // The identity map is always allowed.
  return std::max(0.0, played - best);
}

}  // namespace swapreg::oracle

#endif  // SWAPREG_TESTS_ORACLES_HPP_
