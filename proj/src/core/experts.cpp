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

#include "swapreg/experts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swapreg/error.hpp"

namespace swapreg {
namespace {

constexpr double kMaxRate = 1.0 / 32.0;

double LogSumExp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

std::vector<double> RateGrid(std::uint64_t horizon) {
  if (horizon < 2) Fail(ErrorCode::kDomain, "expert horizon must be at least 2");
  const auto levels = static_cast<std::size_t>(
      std::ceil(std::log2(static_cast<double>(horizon)) - 1e-12));
  std::vector<double> rates(levels + 1);
  for (std::size_t j = 0; j <= levels; ++j) {
    rates[j] = std::ldexp(kMaxRate, -static_cast<int>(j));
  }
  return rates;
}

}  // namespace

ExpertState::ExpertState(std::size_t n_experts, std::uint64_t horizon)
    : ExpertState(n_experts, RateGrid(horizon)) {}

ExpertState::ExpertState(std::size_t n_experts, std::vector<double> rates)
    : n_(n_experts), rates_(std::move(rates)) {
  if (n_ == 0) Fail(ErrorCode::kDomain, "need at least one expert");
  if (rates_.empty()) Fail(ErrorCode::kDomain, "empty learning-rate grid");
  for (double eta : rates_) {
    if (!(eta > 0.0) || eta > kMaxRate) {
      Fail(ErrorCode::kDomain, "learning rate outside (0, 1/32]: " + std::to_string(eta));
    }
  }
  InitPrior();
}

void ExpertState::InitPrior() {
  const std::size_t m = rates_.size();
  std::vector<double> log_prior(m);
  for (std::size_t j = 0; j < m; ++j) log_prior[j] = 2.0 * std::log(rates_[j]);
  const double norm = LogSumExp(log_prior) + std::log(static_cast<double>(n_));
  log_w_.resize(n_ * m);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < m; ++j) log_w_[i * m + j] = log_prior[j] - norm;
  }
}

std::vector<double> ExpertState::Weights() const {
  std::vector<double> out(n_);
  WeightsInto(out);
  return out;
}

void ExpertState::WeightsInto(std::span<double> out) const {
  const std::size_t m = rates_.size();
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += std::exp(log_w_[i * m + j]);
    out[i] = acc;
  }
}

double ExpertState::SubWeight(std::size_t expert, std::size_t rate) const {
  return std::exp(log_w_[expert * rates_.size() + rate]);
}

void ExpertState::Update(std::span<const double> rewards) {
  if (rewards.size() != n_) {
    Fail(ErrorCode::kDomain, "expected " + std::to_string(n_) + " rewards, got " +
                                 std::to_string(rewards.size()));
  }
  for (double u : rewards) {
    if (!(u >= -1.0 && u <= 1.0)) {
      Fail(ErrorCode::kDomain, "reward outside [-1,1]: " + std::to_string(u));
    }
  }

  const std::size_t m = rates_.size();
  std::vector<double> z(log_w_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    const double c = -rewards[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double eta = rates_[j];
      z[i * m + j] = log_w_[i * m + j] - eta * (c + eta * c * c);
    }
  }

  // Per-rate log mass; the normalizer only depends on these.
  std::vector<double> per_rate(m);
  std::vector<double> column(n_);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n_; ++i) column[i] = z[i * m + j];
    per_rate[j] = LogSumExp(column);
  }

  // log sum_j exp(per_rate[j] - eta_j lambda) is convex and strictly
  // decreasing in lambda, so Newton converges monotonically from any start.
  std::vector<double> shifted(m);
  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    for (std::size_t j = 0; j < m; ++j) shifted[j] = per_rate[j] - rates_[j] * lambda;
    const double h = LogSumExp(shifted);
    double slope = 0.0;
    for (std::size_t j = 0; j < m; ++j) slope -= rates_[j] * std::exp(shifted[j] - h);
    const double step = h / slope;
    lambda -= step;
    if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(lambda)) || h == 0.0) break;
  }

  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      log_w_[i * m + j] = z[i * m + j] - rates_[j] * lambda;
    }
  }
  ++round_;
}

}  // namespace swapreg
