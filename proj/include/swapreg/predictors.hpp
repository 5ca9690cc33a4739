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

#ifndef SWAPREG_PREDICTORS_HPP_
#define SWAPREG_PREDICTORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swapreg/binning.hpp"
#include "swapreg/experts.hpp"
#include "swapreg/feasibility.hpp"
#include "swapreg/losses.hpp"
#include "swapreg/rng.hpp"
#include "swapreg/transcript.hpp"

namespace swapreg {

// min(1, sqrt(ln T * ln(1/delta) / T)). Requires T >= 2 and 0 < delta <= 1/T.
double GammaFor(std::uint64_t horizon, double delta);

// What a predictor commits to at the start of a round.
struct Prediction {
  std::vector<double> kappa;  // dense over the predictor's actions
  std::size_t index = 0;      // sampled action
  double r = 0.0;
  double b = 0.0;
  double p = 0.0;
};

// Randomized multi-scale predictor for the adversarial protocol: the
// distribution for round t is fixed by Predict() before any loss for the
// round can be supplied.
class EfficientPredictor {
 public:
  EfficientPredictor(std::uint64_t horizon, double delta, std::uint64_t seed,
                     std::size_t max_pivots = kDefaultPivotCap);

  std::uint64_t horizon() const { return horizon_; }
  double delta() const { return delta_; }
  double gamma() const { return sys_.gamma(); }
  std::uint64_t seed() const { return seed_; }
  const BinSystem& bins() const { return sys_; }
  const std::vector<double>& outcome_set() const { return v_set_; }
  const ExpertState& experts() const { return experts_; }
  std::uint64_t rounds_played() const { return transcript_.rounds.size(); }
  bool awaiting_loss() const { return pending_.has_value(); }

  // Solves for kappa_t and samples the round's bin. kProtocol if a loss is
  // still owed for the current round or all T rounds are done.
  const Prediction& Predict();
  // Last LP diagnostics for the current or most recent round.
  const KappaDist& last_kappa() const { return kappa_; }

  const RoundRecord& Observe(const PLConvexLoss& loss, std::optional<double> outcome = {});
  const RoundRecord& Observe(const VMixture& loss, std::optional<double> outcome = {});

  const Transcript& transcript() const { return transcript_; }
  Transcript TakeTranscript() { return std::move(transcript_); }

 private:
  std::uint64_t horizon_;
  double delta_;
  std::uint64_t seed_;
  std::size_t max_pivots_;
  BinSystem sys_;
  std::vector<double> v_set_;
  ExpertState experts_;
  CounterRng rng_;
  std::vector<double> weights_;
  KappaDist kappa_;
  std::optional<Prediction> pending_;
  Transcript transcript_;
};

// Per-round expert rewards: u[4*theta + xi] = kappa_theta * E_{v~phi} h_own.
std::vector<double> ConstraintRewards(const BinSystem& sys, std::span<const double> kappa,
                                      const Dist01& phi);

// The deterministic bin for a revealed loss distribution: the gamma-width
// witness interval of the mixed V-shape distribution, snapped to the grid.
// Offsets of the components are irrelevant and ignored.
std::size_t TruthfulBin(const BinSystem& sys, std::span<const VMixture> components,
                        std::span<const double> weights);

// Predictor for the order-reversed protocol, where the loss distribution is
// revealed before the prediction.
class TruthfulPredictor {
 public:
  TruthfulPredictor(std::uint64_t horizon, double delta);

  std::uint64_t horizon() const { return horizon_; }
  double delta() const { return delta_; }
  double gamma() const { return sys_.gamma(); }
  const BinSystem& bins() const { return sys_; }
  bool awaiting_loss() const { return pending_.has_value(); }

  const Prediction& Predict(std::span<const VMixture> components,
                            std::span<const double> weights);
  const RoundRecord& Observe(const VMixture& realized, std::optional<double> outcome = {});

  const Transcript& transcript() const { return transcript_; }
  Transcript TakeTranscript() { return std::move(transcript_); }

 private:
  std::uint64_t horizon_;
  double delta_;
  BinSystem sys_;
  std::optional<Prediction> pending_;
  Transcript transcript_;
};

// Per-action swap-regret reduction over the grid {0, 1/(m-1), ..., 1}: one
// multiplicative-weights learner per grid point, played through the
// stationary distribution of their stacked weights.
class FixedGridPredictor {
 public:
  FixedGridPredictor(std::uint32_t grid_size, std::uint64_t horizon, std::uint64_t seed);

  std::uint32_t grid_size() const { return m_; }
  double grid_point(std::size_t i) const { return static_cast<double>(i) / (m_ - 1); }
  double learning_rate() const { return eta_; }
  bool awaiting_loss() const { return pending_.has_value(); }

  const Prediction& Predict();
  const RoundRecord& Observe(const PLConvexLoss& loss, std::optional<double> outcome = {});
  const RoundRecord& Observe(const VMixture& loss, std::optional<double> outcome = {});

  const Transcript& transcript() const { return transcript_; }
  Transcript TakeTranscript() { return std::move(transcript_); }

 private:
  std::vector<double> RowDistribution(std::size_t row) const;
  void StationaryInto(std::vector<double>& p) const;

  std::uint32_t m_;
  std::uint64_t horizon_;
  double eta_;
  CounterRng rng_;
  std::vector<double> log_w_;  // m x m, row i is learner i
  std::vector<double> stationary_;
  std::optional<Prediction> pending_;
  Transcript transcript_;
};

}  // namespace swapreg

#endif  // SWAPREG_PREDICTORS_HPP_
