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

#ifndef SWAPREG_HARNESS_HPP_
#define SWAPREG_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swapreg/adversaries.hpp"
#include "swapreg/transcript.hpp"

namespace swapreg {

enum class AlgorithmKind { kEfficient, kTruthful, kFixedGrid };

const char* AlgorithmName(AlgorithmKind kind);

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kEfficient;
  std::uint32_t grid_size = 11;  // fixed_grid only
};

// {"algorithm": "efficient" | {"kind": "fixed_grid", "m": 11},
//  "adversary": {...}, "T": [256, 512], "delta": 0.001, "seeds": [1, 2] | 20,
//  "write_transcripts": true}
// delta is optional and defaults to 1/T per cell. An integer "seeds" means
// seeds 1..n.
struct ExperimentConfig {
  AlgorithmSpec algorithm;
  AdversarySpec adversary;
  std::vector<std::uint64_t> horizons;
  std::optional<double> delta;
  std::vector<std::uint64_t> seeds;
  bool write_transcripts = true;
};

ExperimentConfig ParseExperimentConfig(std::string_view json_text);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
// kValidation on an empty grid, T < 2 or delta outside (0, 1/min T].
void ValidateExperimentConfig(const ExperimentConfig& config);

struct CellResult {
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double gamma = 0.0;
  double delta = 0.0;
  std::uint64_t rounds = 0;
  double swap_regret = 0.0;
  double external_regret = 0.0;
  double cal_median = 0.0;  // NaN when outcomes are missing
  double mcal1 = 0.0;       // NaN when outcomes are missing
  double seconds = 0.0;
};

// Plays one (T, seed) cell under the protocol the algorithm belongs to.
// Predictor and adversary draw from independent streams of the same seed.
// Errors are caught and reported through ok/error.
CellResult RunCell(const ExperimentConfig& config, std::uint64_t horizon, std::uint64_t seed,
                   Transcript* transcript_out = nullptr);

struct ExponentFit {
  double beta = 0.0;
  double c = 0.0;
  std::size_t points = 0;
};

// Least squares of log y on log x. Pairs with y <= 0 are dropped; if none
// remain the fit is all zero. Otherwise at least three distinct x are needed
// (kValidation).
ExponentFit FitExponent(std::span<const std::pair<double, double>> xy);

struct HorizonSummary {
  std::uint64_t horizon = 0;
  std::size_t cells = 0;
  std::size_t failed = 0;
  double mean_swap_regret = 0.0;
  double median_swap_regret = 0.0;
  double mean_cal_median = 0.0;
  double mean_mcal1 = 0.0;
};

struct SweepResult {
  std::vector<CellResult> cells;  // ordered by (T, seed) as configured
  std::vector<HorizonSummary> horizons;
  ExponentFit swap_regret_fit;  // over per-T means
  ExponentFit cal_median_fit;
};

// Aggregates finished cells. Fits are left zero if fewer than three distinct
// horizons have positive means.
SweepResult Summarize(std::vector<CellResult> cells);

// SWAPREG_JOBS if set to a positive integer, otherwise the hardware
// concurrency (at least 1).
std::size_t DefaultJobs();

// Runs every (T, seed) cell on a pool of jobs threads (0 means DefaultJobs).
// With a non-empty out_dir writes transcripts/T<T>_seed<s>.jsonl,
// summary.csv and sweep.json there.
SweepResult RunSweep(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                     std::size_t jobs = 0);

void WriteSummaryCsv(std::span<const CellResult> cells, std::ostream& out);
std::vector<CellResult> ReadSummaryCsv(std::istream& in);
std::string SweepJson(const SweepResult& sweep);

struct VerifyReport {
  std::string algorithm;
  std::uint64_t rounds = 0;
  bool ok = true;
  std::vector<std::string> problems;  // first few, with round numbers
  double max_violation = 0.0;         // efficient only
  double max_reward_error = 0.0;      // efficient only
  double swap_regret = 0.0;
  double external_regret = 0.0;
  double cal_median = 0.0;
  double mcal1 = 0.0;
};

// Replays a transcript. For the efficient predictor the expert state is
// rebuilt round by round, every recorded kappa is checked against the
// round's constraint system (violation <= 1e-7) and the recorded rewards are
// recomputed. Metrics are recomputed for every algorithm.
VerifyReport VerifyTranscript(const Transcript& transcript);
std::string VerifyReportJson(const VerifyReport& report);

}  // namespace swapreg

#endif  // SWAPREG_HARNESS_HPP_
