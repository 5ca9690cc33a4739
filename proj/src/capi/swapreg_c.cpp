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

#include "swapreg/swapreg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "swapreg/error.hpp"
#include "swapreg/harness.hpp"
#include "swapreg/losses.hpp"
#include "swapreg/metrics.hpp"
#include "swapreg/predictors.hpp"
#include "swapreg/transcript.hpp"

struct swapreg_loss {
  swapreg::PLConvexLoss loss;
  swapreg::VMixture decomposed;
};

struct swapreg_predictor {
  std::variant<swapreg::EfficientPredictor, swapreg::TruthfulPredictor,
               swapreg::FixedGridPredictor>
      impl;
};

namespace {

using swapreg::ErrorCode;

thread_local std::string g_last_error;

swapreg_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
      return SWAPREG_E_DOMAIN;
    case ErrorCode::kValidation:
      return SWAPREG_E_VALIDATION;
    case ErrorCode::kSolver:
      return SWAPREG_E_SOLVER;
    case ErrorCode::kProtocol:
      return SWAPREG_E_PROTOCOL;
    case ErrorCode::kIo:
      return SWAPREG_E_IO;
    case ErrorCode::kParse:
      return SWAPREG_E_PARSE;
    case ErrorCode::kInternal:
      return SWAPREG_E_INTERNAL;
  }
  return SWAPREG_E_INTERNAL;
}

swapreg_status SetError(swapreg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
swapreg_status Guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SWAPREG_OK;
  } catch (const swapreg::Error& e) {
    return SetError(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return SetError(SWAPREG_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return SetError(SWAPREG_E_INTERNAL, e.what());
  } catch (...) {
    return SetError(SWAPREG_E_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

#define SWAPREG_CHECK_ARG(cond)                                             \
  do {                                                                      \
    if (!(cond)) return SetError(SWAPREG_E_ARGUMENT, "null argument: " #cond); \
  } while (0)

const swapreg::Transcript& TranscriptOf(const swapreg_predictor* pred) {
  return std::visit([](const auto& p) -> const swapreg::Transcript& { return p.transcript(); },
                    pred->impl);
}

}  // namespace

extern "C" {

const char* swapreg_version(void) { return "0.1.0"; }

const char* swapreg_status_name(swapreg_status status) {
  switch (status) {
    case SWAPREG_OK:
      return "ok";
    case SWAPREG_E_DOMAIN:
      return "domain";
    case SWAPREG_E_VALIDATION:
      return "validation";
    case SWAPREG_E_SOLVER:
      return "solver";
    case SWAPREG_E_PROTOCOL:
      return "protocol";
    case SWAPREG_E_IO:
      return "io";
    case SWAPREG_E_PARSE:
      return "parse";
    case SWAPREG_E_INTERNAL:
      return "internal";
    case SWAPREG_E_ARGUMENT:
      return "argument";
  }
  return "unknown";
}

const char* swapreg_last_error(void) { return g_last_error.c_str(); }

void swapreg_string_free(char* s) { std::free(s); }

size_t swapreg_default_jobs(void) { return swapreg::DefaultJobs(); }

swapreg_status swapreg_loss_create(const double* breakpoints, size_t n, const double* slopes,
                                   double value_at_zero, swapreg_loss** out) {
  SWAPREG_CHECK_ARG(breakpoints && out);
  SWAPREG_CHECK_ARG(slopes || n < 2);
  return Guard([&] {
    swapreg::PLConvexLoss loss(std::vector<double>(breakpoints, breakpoints + n),
                               std::vector<double>(slopes, slopes + (n >= 1 ? n - 1 : 0)),
                               value_at_zero);
    swapreg::VMixture v = swapreg::VShapeDecompose(loss);
    *out = new swapreg_loss{std::move(loss), std::move(v)};
  });
}

swapreg_status swapreg_loss_vshape(double v, swapreg_loss** out) {
  SWAPREG_CHECK_ARG(out);
  return Guard([&] {
    swapreg::PLConvexLoss loss = swapreg::PLConvexLoss::VShape(v);
    swapreg::VMixture d = swapreg::VShapeDecompose(loss);
    *out = new swapreg_loss{std::move(loss), std::move(d)};
  });
}

swapreg_status swapreg_loss_eval(const swapreg_loss* loss, double p, double* out) {
  SWAPREG_CHECK_ARG(loss && out);
  return Guard([&] { *out = loss->loss(p); });
}

void swapreg_loss_free(swapreg_loss* loss) { delete loss; }

swapreg_status swapreg_predictor_create_efficient(uint64_t horizon, double delta, uint64_t seed,
                                                  swapreg_predictor** out) {
  SWAPREG_CHECK_ARG(out);
  return Guard([&] {
    const double d = delta > 0.0 ? delta : 1.0 / static_cast<double>(horizon);
    *out = new swapreg_predictor{swapreg::EfficientPredictor(horizon, d, seed)};
  });
}

swapreg_status swapreg_predictor_create_truthful(uint64_t horizon, double delta,
                                                 swapreg_predictor** out) {
  SWAPREG_CHECK_ARG(out);
  return Guard([&] {
    const double d = delta > 0.0 ? delta : 1.0 / static_cast<double>(horizon);
    *out = new swapreg_predictor{swapreg::TruthfulPredictor(horizon, d)};
  });
}

swapreg_status swapreg_predictor_create_fixed_grid(uint32_t grid_size, uint64_t horizon,
                                                   uint64_t seed, swapreg_predictor** out) {
  SWAPREG_CHECK_ARG(out);
  return Guard([&] {
    *out = new swapreg_predictor{swapreg::FixedGridPredictor(grid_size, horizon, seed)};
  });
}

void swapreg_predictor_free(swapreg_predictor* pred) { delete pred; }

swapreg_status swapreg_predictor_num_actions(const swapreg_predictor* pred, size_t* out) {
  SWAPREG_CHECK_ARG(pred && out);
  return Guard([&] {
    *out = std::visit(
        [](const auto& p) -> size_t {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, swapreg::FixedGridPredictor>) {
            return p.grid_size();
          } else {
            return p.bins().theta_size();
          }
        },
        pred->impl);
  });
}

swapreg_status swapreg_predictor_gamma(const swapreg_predictor* pred, double* out) {
  SWAPREG_CHECK_ARG(pred && out);
  return Guard([&] {
    *out = std::visit(
        [](const auto& p) -> double {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, swapreg::FixedGridPredictor>) {
            return 0.0;
          } else {
            return p.gamma();
          }
        },
        pred->impl);
  });
}

swapreg_status swapreg_predictor_predict(swapreg_predictor* pred, double* kappa, size_t* action,
                                         double* p) {
  SWAPREG_CHECK_ARG(pred && action && p);
  return Guard([&] {
    const swapreg::Prediction* pr = nullptr;
    if (auto* e = std::get_if<swapreg::EfficientPredictor>(&pred->impl)) {
      pr = &e->Predict();
    } else if (auto* g = std::get_if<swapreg::FixedGridPredictor>(&pred->impl)) {
      pr = &g->Predict();
    } else {
      swapreg::Fail(ErrorCode::kProtocol,
                    "the truthful predictor needs the loss distribution first");
    }
    if (kappa) std::copy(pr->kappa.begin(), pr->kappa.end(), kappa);
    *action = pr->index;
    *p = pr->p;
  });
}

swapreg_status swapreg_predictor_predict_given(swapreg_predictor* pred,
                                               const swapreg_loss* const* losses,
                                               const double* weights, size_t n, size_t* action,
                                               double* p) {
  SWAPREG_CHECK_ARG(pred && losses && weights && action && p);
  return Guard([&] {
    auto* tp = std::get_if<swapreg::TruthfulPredictor>(&pred->impl);
    if (!tp) swapreg::Fail(ErrorCode::kProtocol, "only the truthful predictor plays second");
    std::vector<swapreg::VMixture> comps;
    comps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      Require(losses[i] != nullptr, "null loss in mixture");
      comps.push_back(losses[i]->decomposed);
    }
    const swapreg::Prediction& pr = tp->Predict(comps, std::vector<double>(weights, weights + n));
    *action = pr.index;
    *p = pr.p;
  });
}

swapreg_status swapreg_predictor_observe(swapreg_predictor* pred, const swapreg_loss* loss,
                                         int has_outcome, double outcome) {
  SWAPREG_CHECK_ARG(pred && loss);
  return Guard([&] {
    std::optional<double> y;
    if (has_outcome) y = outcome;
    std::visit([&](auto& p) { p.Observe(loss->decomposed, y); }, pred->impl);
  });
}

swapreg_status swapreg_predictor_rounds(const swapreg_predictor* pred, uint64_t* out) {
  SWAPREG_CHECK_ARG(pred && out);
  return Guard([&] { *out = TranscriptOf(pred).rounds.size(); });
}

swapreg_status swapreg_predictor_swap_regret(const swapreg_predictor* pred, double* out) {
  SWAPREG_CHECK_ARG(pred && out);
  return Guard([&] { *out = swapreg::SwapRegret(TranscriptOf(pred)).total; });
}

swapreg_status swapreg_predictor_write_transcript(const swapreg_predictor* pred,
                                                  const char* path) {
  SWAPREG_CHECK_ARG(pred && path);
  return Guard([&] {
    std::ofstream out(path);
    if (!out) swapreg::Fail(ErrorCode::kIo, std::string("cannot open ") + path);
    swapreg::WriteJsonLines(TranscriptOf(pred), out);
    if (!out) swapreg::Fail(ErrorCode::kIo, std::string("cannot write ") + path);
  });
}

swapreg_status swapreg_cal_error(const char* rule, double q, const double* predictions,
                                 const double* outcomes, size_t n, double* out) {
  SWAPREG_CHECK_ARG(rule && out);
  SWAPREG_CHECK_ARG((predictions && outcomes) || n == 0);
  return Guard([&] {
    swapreg::ScoringRule r;
    const std::string name = rule;
    if (name == "median") {
      r = swapreg::ScoringRule::Median();
    } else if (name == "mean") {
      r = swapreg::ScoringRule::Mean();
    } else if (name == "quantile") {
      r = swapreg::ScoringRule::Quantile(q);
    } else {
      swapreg::Fail(ErrorCode::kDomain, "unknown scoring rule '" + name + "'");
    }
    *out = swapreg::CalError(r, {predictions, n}, {outcomes, n});
  });
}

swapreg_status swapreg_mcal1_median(const double* predictions, const double* outcomes, size_t n,
                                    double* out) {
  SWAPREG_CHECK_ARG(out);
  SWAPREG_CHECK_ARG((predictions && outcomes) || n == 0);
  return Guard([&] { *out = swapreg::Mcal1Median({predictions, n}, {outcomes, n}); });
}

swapreg_status swapreg_run(const char* config_path, const char* out_dir, size_t jobs,
                           char** sweep_json) {
  SWAPREG_CHECK_ARG(config_path && out_dir);
  return Guard([&] {
    const swapreg::ExperimentConfig config = swapreg::LoadExperimentConfig(config_path);
    const swapreg::SweepResult sweep = swapreg::RunSweep(config, out_dir, jobs);
    if (sweep_json) *sweep_json = CopyString(swapreg::SweepJson(sweep));
  });
}

swapreg_status swapreg_fit_summary(const char* summary_path, char** fit_json) {
  SWAPREG_CHECK_ARG(summary_path && fit_json);
  return Guard([&] {
    std::ifstream in(summary_path);
    if (!in) swapreg::Fail(ErrorCode::kIo, std::string("cannot open ") + summary_path);
    const swapreg::SweepResult sweep = swapreg::Summarize(swapreg::ReadSummaryCsv(in));
    *fit_json = CopyString(swapreg::SweepJson(sweep));
  });
}

swapreg_status swapreg_verify_transcript(const char* path, int* ok, char** report_json) {
  SWAPREG_CHECK_ARG(path && ok);
  return Guard([&] {
    std::ifstream in(path);
    if (!in) swapreg::Fail(ErrorCode::kIo, std::string("cannot open ") + path);
    const swapreg::VerifyReport report = swapreg::VerifyTranscript(swapreg::ReadJsonLines(in));
    *ok = report.ok ? 1 : 0;
    if (report_json) *report_json = CopyString(swapreg::VerifyReportJson(report));
  });
}

}  // extern "C"
