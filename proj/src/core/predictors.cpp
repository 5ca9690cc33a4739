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

#include "swapreg/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swapreg/constraints.hpp"
#include "swapreg/error.hpp"

namespace swapreg {
namespace {

constexpr double kStationaryTol = 1e-10;
constexpr int kStationaryMaxIters = 100000;

std::vector<SparseEntry> Sparse(std::span<const double> dense) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) out.push_back({i, dense[i]});
  }
  return out;
}

void CheckCanPredict(const std::optional<Prediction>& pending, std::size_t played,
                     std::uint64_t horizon) {
  if (pending) Fail(ErrorCode::kProtocol, "prediction already made this round");
  if (played >= horizon) {
    Fail(ErrorCode::kProtocol, "all " + std::to_string(horizon) + " rounds played");
  }
}

void CheckCanObserve(const std::optional<Prediction>& pending) {
  if (!pending) Fail(ErrorCode::kProtocol, "loss supplied before a prediction");
}

RoundRecord MakeRecord(std::uint64_t t, const Prediction& pred, const VMixture& loss,
                       std::optional<double> outcome) {
  RoundRecord rec;
  rec.t = t;
  rec.kappa = Sparse(pred.kappa);
  rec.action = pred.index;
  rec.r = pred.r;
  rec.b = pred.b;
  rec.p = pred.p;
  rec.loss = loss;
  rec.outcome = outcome;
  return rec;
}

}  // namespace

double GammaFor(std::uint64_t horizon, double delta) {
  if (horizon < 2) Fail(ErrorCode::kDomain, "horizon must be at least 2");
  const double t = static_cast<double>(horizon);
  if (!(delta > 0.0) || delta > 1.0 / t) {
    Fail(ErrorCode::kDomain, "delta must lie in (0, 1/T], got " + std::to_string(delta));
  }
  return std::min(1.0, std::sqrt(std::log(t) * std::log(1.0 / delta) / t));
}

std::vector<double> ConstraintRewards(const BinSystem& sys, std::span<const double> kappa,
                                      const Dist01& phi) {
  if (kappa.size() != sys.theta_size()) Fail(ErrorCode::kDomain, "kappa size mismatch");
  std::vector<double> u(NumConstraints(sys), 0.0);
  for (std::size_t k = 0; k < kappa.size(); ++k) {
    if (kappa[k] == 0.0) continue;
    const auto own = ExpectedOwn(sys.theta()[k], sys.gamma(), phi);
    for (std::size_t x = 0; x < 4; ++x) u[4 * k + x] = kappa[k] * own[x];
  }
  return u;
}

// ---- EfficientPredictor ----------------------------------------------------

EfficientPredictor::EfficientPredictor(std::uint64_t horizon, double delta,
                                       std::uint64_t seed, std::size_t max_pivots)
    : horizon_(horizon),
      delta_(delta),
      seed_(seed),
      max_pivots_(max_pivots),
      sys_(GammaFor(horizon, delta)),
      v_set_(Breakpoints(sys_)),
      experts_(NumConstraints(sys_), horizon),
      rng_(seed, RngStream::kPredictor),
      weights_(NumConstraints(sys_)) {
  transcript_.header.algorithm = "efficient";
  transcript_.header.horizon = horizon;
  transcript_.header.delta = delta;
  transcript_.header.gamma = sys_.gamma();
  transcript_.header.seed = seed;
}

const Prediction& EfficientPredictor::Predict() {
  CheckCanPredict(pending_, transcript_.rounds.size(), horizon_);
  experts_.WeightsInto(weights_);
  const MixedConstraint hbar = MixedConstraint::Mix(sys_, weights_);
  kappa_ = SolveKappa(hbar, sys_, v_set_, max_pivots_);

  Prediction pred;
  pred.kappa = kappa_.prob;
  pred.index = SampleIndex(pred.kappa, rng_.NextDouble());
  const Bin& bin = sys_.theta()[pred.index];
  pred.r = bin.r;
  pred.b = bin.b;
  pred.p = bin.b;
  pending_ = std::move(pred);
  return *pending_;
}

const RoundRecord& EfficientPredictor::Observe(const PLConvexLoss& loss,
                                               std::optional<double> outcome) {
  CheckCanObserve(pending_);
  return Observe(VShapeDecompose(loss), outcome);
}

const RoundRecord& EfficientPredictor::Observe(const VMixture& loss,
                                               std::optional<double> outcome) {
  CheckCanObserve(pending_);
  const std::vector<double> u = ConstraintRewards(sys_, pending_->kappa, loss.phi);
  experts_.Update(u);
  RoundRecord rec = MakeRecord(transcript_.rounds.size() + 1, *pending_, loss, outcome);
  rec.rewards = Sparse(u);
  pending_.reset();
  transcript_.rounds.push_back(std::move(rec));
  return transcript_.rounds.back();
}

// ---- Truthful ---------------------------------------------------------------

std::size_t TruthfulBin(const BinSystem& sys, std::span<const VMixture> components,
                        std::span<const double> weights) {
  std::vector<Dist01> phis;
  phis.reserve(components.size());
  for (const VMixture& c : components) phis.push_back(c.phi);
  const Dist01 mixed = Mixture(phis, weights);
  return sys.Locate(GammaWidth(mixed, sys.gamma()));
}

TruthfulPredictor::TruthfulPredictor(std::uint64_t horizon, double delta)
    : horizon_(horizon), delta_(delta), sys_(GammaFor(horizon, delta)) {
  transcript_.header.algorithm = "truthful";
  transcript_.header.horizon = horizon;
  transcript_.header.delta = delta;
  transcript_.header.gamma = sys_.gamma();
}

const Prediction& TruthfulPredictor::Predict(std::span<const VMixture> components,
                                             std::span<const double> weights) {
  CheckCanPredict(pending_, transcript_.rounds.size(), horizon_);
  Prediction pred;
  pred.index = TruthfulBin(sys_, components, weights);
  pred.kappa.assign(sys_.theta_size(), 0.0);
  pred.kappa[pred.index] = 1.0;
  const Bin& bin = sys_.theta()[pred.index];
  pred.r = bin.r;
  pred.b = bin.b;
  pred.p = bin.b;
  pending_ = std::move(pred);
  return *pending_;
}

const RoundRecord& TruthfulPredictor::Observe(const VMixture& realized,
                                              std::optional<double> outcome) {
  CheckCanObserve(pending_);
  transcript_.rounds.push_back(
      MakeRecord(transcript_.rounds.size() + 1, *pending_, realized, outcome));
  pending_.reset();
  return transcript_.rounds.back();
}

// ---- FixedGridPredictor -----------------------------------------------------

FixedGridPredictor::FixedGridPredictor(std::uint32_t grid_size, std::uint64_t horizon,
                                       std::uint64_t seed)
    : m_(grid_size), horizon_(horizon), rng_(seed, RngStream::kPredictor) {
  if (grid_size < 2) Fail(ErrorCode::kDomain, "grid size must be at least 2");
  if (horizon < 1) Fail(ErrorCode::kDomain, "horizon must be positive");
  eta_ = std::sqrt(8.0 * std::log(static_cast<double>(m_)) / static_cast<double>(horizon));
  log_w_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  stationary_.assign(m_, 1.0 / m_);
  transcript_.header.algorithm = "fixed_grid";
  transcript_.header.horizon = horizon;
  transcript_.header.seed = seed;
  transcript_.header.grid_size = grid_size;
}

std::vector<double> FixedGridPredictor::RowDistribution(std::size_t row) const {
  std::vector<double> q(m_);
  const double* lw = log_w_.data() + row * m_;
  const double top = *std::max_element(lw, lw + m_);
  double total = 0.0;
  for (std::size_t j = 0; j < m_; ++j) {
    q[j] = std::exp(lw[j] - top);
    total += q[j];
  }
  for (double& x : q) x /= total;
  return q;
}

void FixedGridPredictor::StationaryInto(std::vector<double>& p) const {
  std::vector<std::vector<double>> rows(m_);
  for (std::size_t i = 0; i < m_; ++i) rows[i] = RowDistribution(i);
  std::vector<double> next(m_);
  for (int iter = 0; iter < kStationaryMaxIters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) next[j] += p[i] * rows[i][j];
    }
    double total = 0.0;
    for (double x : next) total += x;
    double diff = 0.0;
    for (std::size_t j = 0; j < m_; ++j) {
      next[j] /= total;
      diff += std::abs(next[j] - p[j]);
    }
    p.swap(next);
    if (diff <= kStationaryTol) return;
  }
}

const Prediction& FixedGridPredictor::Predict() {
  CheckCanPredict(pending_, transcript_.rounds.size(), horizon_);
  StationaryInto(stationary_);
  Prediction pred;
  pred.kappa = stationary_;
  pred.index = SampleIndex(pred.kappa, rng_.NextDouble());
  pred.r = 1.0 / (m_ - 1);
  pred.b = grid_point(pred.index);
  pred.p = pred.b;
  pending_ = std::move(pred);
  return *pending_;
}

const RoundRecord& FixedGridPredictor::Observe(const PLConvexLoss& loss,
                                               std::optional<double> outcome) {
  CheckCanObserve(pending_);
  return Observe(VShapeDecompose(loss), outcome);
}

const RoundRecord& FixedGridPredictor::Observe(const VMixture& loss,
                                               std::optional<double> outcome) {
  CheckCanObserve(pending_);
  std::vector<double> l(m_);
  for (std::size_t j = 0; j < m_; ++j) l[j] = ExpectedAbs(loss.phi, grid_point(j));
  const double low = *std::min_element(l.begin(), l.end());
  const std::vector<double>& p = pending_->kappa;
  for (std::size_t i = 0; i < m_; ++i) {
    if (p[i] == 0.0) continue;
    double* lw = log_w_.data() + i * m_;
    for (std::size_t j = 0; j < m_; ++j) lw[j] -= eta_ * p[i] * (l[j] - low);
  }
  transcript_.rounds.push_back(
      MakeRecord(transcript_.rounds.size() + 1, *pending_, loss, outcome));
  pending_.reset();
  return transcript_.rounds.back();
}

}  // namespace swapreg
