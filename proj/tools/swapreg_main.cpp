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

// swapreg: run seed sweeps, fit growth exponents, verify transcripts.
//
//   swapreg run --config sweep.json --out results/ [--jobs N]
//   swapreg fit --in results/summary.csv
//   swapreg verify --transcript results/transcripts/T256_seed1.jsonl
//
// Exit status: 0 on success, 1 if verification found problems, 2 on errors.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "swapreg/swapreg.h"

namespace {

int Report(swapreg_status status) {
  std::fprintf(stderr, "swapreg: %s error: %s\n", swapreg_status_name(status),
               swapreg_last_error());
  return 2;
}

void PrintOwned(char* text) {
  if (!text) return;
  std::printf("%s\n", text);
  swapreg_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swap-regret predictors and experiment harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", swapreg_version());

  std::string config_path;
  std::string out_dir;
  std::size_t jobs = 0;
  auto* run = app.add_subcommand("run", "Play every (T, seed) cell of a sweep");
  run->add_option("--config", config_path, "Sweep config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--jobs", jobs, "Worker threads (default: $SWAPREG_JOBS or all cores)");

  std::string summary_path;
  auto* fit = app.add_subcommand("fit", "Fit log-log growth exponents to a summary.csv");
  fit->add_option("--in", summary_path, "summary.csv from a run")->required()->check(CLI::ExistingFile);

  std::string transcript_path;
  auto* verify = app.add_subcommand("verify", "Replay a transcript and re-check every round");
  verify->add_option("--transcript", transcript_path, "JSON-lines transcript")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    char* sweep = nullptr;
    const swapreg_status s = swapreg_run(config_path.c_str(), out_dir.c_str(), jobs, &sweep);
    if (s != SWAPREG_OK) return Report(s);
    PrintOwned(sweep);
    return 0;
  }
  if (*fit) {
    char* result = nullptr;
    const swapreg_status s = swapreg_fit_summary(summary_path.c_str(), &result);
    if (s != SWAPREG_OK) return Report(s);
    PrintOwned(result);
    return 0;
  }
  int ok = 0;
  char* report = nullptr;
  const swapreg_status s = swapreg_verify_transcript(transcript_path.c_str(), &ok, &report);
  if (s != SWAPREG_OK) return Report(s);
  PrintOwned(report);
  return ok ? 0 : 1;
}
