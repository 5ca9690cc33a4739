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

#ifndef SWAPREG_TRANSCRIPT_HPP_
#define SWAPREG_TRANSCRIPT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swapreg/losses.hpp"

namespace swapreg {

struct SparseEntry {
  std::size_t index = 0;
  double value = 0.0;
};

// One round of play.
//
// kappa is the committed distribution over the algorithm's actions (Theta for
// the multi-scale predictors, grid points for the fixed grid), stored sparse.
// rewards are the per-constraint expert rewards (efficient predictor only).
struct RoundRecord {
  std::uint64_t t = 0;  // 1-based
  std::vector<SparseEntry> kappa;
  std::size_t action = 0;
  double r = 0.0;
  double b = 0.0;
  double p = 0.0;
  VMixture loss{Dist01::PointMass(0.0), 0.0};
  std::optional<double> outcome;
  std::vector<SparseEntry> rewards;
};

struct TranscriptHeader {
  std::string algorithm;  // "efficient", "truthful" or "fixed_grid"
  std::uint64_t horizon = 0;
  double delta = 0.0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::uint32_t grid_size = 0;  // fixed_grid only
  std::string adversary;        // adversary spec as a JSON document
};

struct Transcript {
  TranscriptHeader header;
  std::vector<RoundRecord> rounds;
};

// JSON lines: a {"header": ...} line, then one object per round. Numbers are
// printed with 17 significant digits so they read back bit-exactly.
void WriteJsonLines(const Transcript& transcript, std::ostream& out);
Transcript ReadJsonLines(std::istream& in);

// t,r,b,p,loss_at_p,loss_offset,loss_atoms,outcome
void WriteCsv(const Transcript& transcript, std::ostream& out);

}  // namespace swapreg

#endif  // SWAPREG_TRANSCRIPT_HPP_
