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

#ifndef SWAPREG_METRICS_HPP_
#define SWAPREG_METRICS_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swapreg/losses.hpp"
#include "swapreg/transcript.hpp"

namespace swapreg {

struct BinRegret {
  double p = 0.0;
  std::uint64_t count = 0;
  double best_point = 0.0;  // s_b
  double played = 0.0;      // sum of E|p - v| over the bin's rounds
  double best = 0.0;        // the same sum at best_point
  double contribution = 0.0;
};

// Offsets cancel within every difference and are left out of played/best.
struct RegretReport {
  double total = 0.0;
  std::vector<BinRegret> bins;  // sorted by p
  double external = 0.0;
  double external_point = 0.0;
};

// Rounds are grouped by bit-identical p. Per group the best fixed response
// is a left weighted median of the pooled V-shape atoms, which is exact for
// piecewise-linear losses.
RegretReport SwapRegret(std::span<const double> predictions, std::span<const VMixture> losses);
RegretReport SwapRegret(const Transcript& transcript);

// sum_p n_p * (mean score at p - min over p* of the mean score), with the
// minimizer in closed form (median, q-quantile, mean of the group's y).
double CalError(const ScoringRule& rule, std::span<const double> predictions,
                std::span<const double> outcomes);

// 2 * sum_p n_p * |Pr[y <= p | p] - 1/2|, computed as sum_p |2 c_p - n_p|
// where c_p counts outcomes at most p, so integer inputs give integer output.
double Mcal1Median(std::span<const double> predictions, std::span<const double> outcomes);

std::string RegretReportJson(const RegretReport& report);
void WriteBinTableCsv(const RegretReport& report, std::ostream& out);

}  // namespace swapreg

#endif  // SWAPREG_METRICS_HPP_
