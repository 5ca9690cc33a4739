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

#include "swapreg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "swapreg/constraints.hpp"
#include "swapreg/error.hpp"
#include "swapreg/feasibility.hpp"
#include "swapreg/metrics.hpp"
#include "swapreg/predictors.hpp"

namespace swapreg {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxListedProblems = 10;

std::vector<std::uint64_t> ParseSeeds(const json& j) {
  std::vector<std::uint64_t> seeds;
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const auto n = j.get<std::int64_t>();
    if (n < 1) Fail(ErrorCode::kValidation, "seed count must be positive");
    for (std::int64_t s = 1; s <= n; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  } else {
    seeds = j.get<std::vector<std::uint64_t>>();
  }
  return seeds;
}

AlgorithmSpec ParseAlgorithm(const json& j) {
  AlgorithmSpec spec;
  const std::string kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
  if (kind == "efficient") {
    spec.kind = AlgorithmKind::kEfficient;
  } else if (kind == "truthful") {
    spec.kind = AlgorithmKind::kTruthful;
  } else if (kind == "fixed_grid") {
    spec.kind = AlgorithmKind::kFixedGrid;
    if (j.is_object()) spec.grid_size = j.value("m", 11u);
  } else {
    Fail(ErrorCode::kValidation, "unknown algorithm '" + kind + "'");
  }
  return spec;
}

json AlgorithmJson(const AlgorithmSpec& spec) {
  json j{{"kind", AlgorithmName(spec.kind)}};
  if (spec.kind == AlgorithmKind::kFixedGrid) j["m"] = spec.grid_size;
  return j;
}

// Outcomes for calibration metrics, or nothing if any round lacks one.
std::optional<std::vector<double>> Outcomes(const Transcript& tr) {
  std::vector<double> ys;
  ys.reserve(tr.rounds.size());
  for (const RoundRecord& rec : tr.rounds) {
    if (!rec.outcome) return std::nullopt;
    ys.push_back(*rec.outcome);
  }
  return ys;
}

struct Metrics {
  double swap_regret = 0.0;
  double external = 0.0;
  double cal_median = kNaN;
  double mcal1 = kNaN;
};

Metrics ComputeMetrics(const Transcript& tr) {
  Metrics m;
  const RegretReport report = SwapRegret(tr);
  m.swap_regret = report.total;
  m.external = report.external;
  if (const auto ys = Outcomes(tr)) {
    std::vector<double> ps;
    ps.reserve(tr.rounds.size());
    for (const RoundRecord& rec : tr.rounds) ps.push_back(rec.p);
    m.cal_median = CalError(ScoringRule::Median(), ps, *ys);
    m.mcal1 = Mcal1Median(ps, *ys);
  }
  return m;
}

std::vector<double> ActionPoints(const BinSystem& sys) {
  std::vector<double> out;
  out.reserve(sys.theta_size());
  for (const Bin& bin : sys.theta()) out.push_back(bin.b);
  return out;
}

template <class Predictor>
Transcript PlayAdversarial(Predictor& pred, Adversary& adv, std::uint64_t horizon,
                           const std::vector<double>& action_points) {
  std::vector<double> past_p;
  std::vector<double> past_y;
  past_p.reserve(horizon);
  past_y.reserve(horizon);
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const Prediction& pr = pred.Predict();
    AdversaryView view;
    view.t = t;
    view.past_predictions = past_p;
    view.past_outcomes = past_y;
    view.kappa = pr.kappa;
    view.action_points = action_points;
    const double p = pr.p;
    EmittedLoss e = adv.NextLoss(view);
    pred.Observe(e.loss, e.outcome);
    past_p.push_back(p);
    past_y.push_back(e.outcome.value_or(kNaN));
  }
  return pred.TakeTranscript();
}

Transcript PlayOrderReversed(TruthfulPredictor& pred, Adversary& adv, std::uint64_t horizon) {
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const LossMixture pi = adv.NextMixture(t);
    std::vector<VMixture> components;
    components.reserve(pi.losses.size());
    for (const PLConvexLoss& l : pi.losses) components.push_back(VShapeDecompose(l));
    pred.Predict(components, pi.weights);
    const EmittedLoss e = adv.Draw(pi);
    pred.Observe(VShapeDecompose(e.loss), e.outcome);
  }
  return pred.TakeTranscript();
}

double Median(std::vector<double> xs) {
  if (xs.empty()) return kNaN;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

ExponentFit FitPositive(const std::vector<std::pair<double, double>>& xy) {
  std::set<double> distinct;
  for (const auto& [x, y] : xy) {
    if (y > 0.0) distinct.insert(x);
  }
  if (distinct.size() < 3) return {};
  return FitExponent(xy);
}

json NumberOrNull(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void AddProblem(VerifyReport& report, std::uint64_t t, const std::string& what) {
  report.ok = false;
  if (report.problems.size() < kMaxListedProblems) {
    report.problems.push_back("round " + std::to_string(t) + ": " + what);
  }
}

std::vector<double> Dense(const std::vector<SparseEntry>& sparse, std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (const SparseEntry& e : sparse) {
    if (e.index >= n) Fail(ErrorCode::kValidation, "sparse index out of range");
    out[e.index] = e.value;
  }
  return out;
}

void VerifyEfficient(const Transcript& tr, VerifyReport& report) {
  const double gamma = GammaFor(tr.header.horizon, tr.header.delta);
  if (gamma != tr.header.gamma) AddProblem(report, 0, "header gamma does not match T and delta");
  const BinSystem sys(gamma);
  const std::vector<double> v_set = Breakpoints(sys);
  ExpertState experts(NumConstraints(sys), tr.header.horizon);
  std::vector<double> weights(NumConstraints(sys));

  for (const RoundRecord& rec : tr.rounds) {
    const std::vector<double> kappa = Dense(rec.kappa, sys.theta_size());
    double total = 0.0;
    bool negative = false;
    for (double k : kappa) {
      total += k;
      negative = negative || k < 0.0;
    }
    if (negative || std::abs(total - 1.0) > 1e-9) AddProblem(report, rec.t, "kappa not a distribution");
    if (rec.action >= sys.theta_size() || kappa[rec.action] <= 0.0) {
      AddProblem(report, rec.t, "sampled bin outside the support of kappa");
    } else if (rec.p != sys.theta()[rec.action].b || rec.b != rec.p ||
               rec.r != sys.theta()[rec.action].r) {
      AddProblem(report, rec.t, "prediction does not match the sampled bin");
    }

    experts.WeightsInto(weights);
    const MixedConstraint hbar = MixedConstraint::Mix(sys, weights);
    const double violation = MaxExpectedViolation(ConstraintMatrix(hbar, sys, v_set), kappa);
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > kFeasibilityTol) {
      AddProblem(report, rec.t, "kappa violates the constraint system by " +
                                    std::to_string(violation));
    }

    const std::vector<double> u = ConstraintRewards(sys, kappa, rec.loss.phi);
    const std::vector<double> recorded = Dense(rec.rewards, u.size());
    double err = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) err = std::max(err, std::abs(u[i] - recorded[i]));
    report.max_reward_error = std::max(report.max_reward_error, err);
    if (err > 1e-12) AddProblem(report, rec.t, "recorded rewards differ by " + std::to_string(err));
    experts.Update(u);
  }
}

void VerifyTruthful(const Transcript& tr, VerifyReport& report) {
  const BinSystem sys(GammaFor(tr.header.horizon, tr.header.delta));
  for (const RoundRecord& rec : tr.rounds) {
    if (rec.kappa.size() != 1 || rec.kappa[0].index != rec.action || rec.kappa[0].value != 1.0) {
      AddProblem(report, rec.t, "truthful play must be deterministic");
    }
    if (rec.action >= sys.theta_size() || rec.p != sys.theta()[rec.action].b) {
      AddProblem(report, rec.t, "prediction is not a grid point of its bin");
    }
  }
}

void VerifyFixedGrid(const Transcript& tr, VerifyReport& report) {
  const std::uint32_t m = tr.header.grid_size;
  if (m < 2) {
    AddProblem(report, 0, "grid_size missing from header");
    return;
  }
  for (const RoundRecord& rec : tr.rounds) {
    if (rec.action >= m || rec.p != static_cast<double>(rec.action) / (m - 1)) {
      AddProblem(report, rec.t, "prediction is not the sampled grid point");
    }
  }
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double ParseDouble(const std::string& s) {
  if (s.empty() || s == "nan") return kNaN;
  std::size_t used = 0;
  const double x = std::stod(s, &used);
  if (used != s.size()) Fail(ErrorCode::kParse, "bad number '" + s + "'");
  return x;
}

}  // namespace

const char* AlgorithmName(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kEfficient:
      return "efficient";
    case AlgorithmKind::kTruthful:
      return "truthful";
    case AlgorithmKind::kFixedGrid:
      return "fixed_grid";
  }
  return "unknown";
}

ExperimentConfig ParseExperimentConfig(std::string_view json_text) {
  ExperimentConfig config;
  try {
    const json j = json::parse(json_text);
    config.algorithm = ParseAlgorithm(j.at("algorithm"));
    config.adversary = ParseAdversarySpec(j.at("adversary").dump());
    const json& t = j.at("T");
    config.horizons = t.is_array() ? t.get<std::vector<std::uint64_t>>()
                                   : std::vector<std::uint64_t>{t.get<std::uint64_t>()};
    if (j.contains("delta") && !j.at("delta").is_null()) config.delta = j.at("delta").get<double>();
    config.seeds = ParseSeeds(j.at("seeds"));
    config.write_transcripts = j.value("write_transcripts", true);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("config: ") + e.what());
  }
  ValidateExperimentConfig(config);
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentConfig(buffer.str());
}

void ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.horizons.empty()) Fail(ErrorCode::kValidation, "no horizons given");
  if (config.seeds.empty()) Fail(ErrorCode::kValidation, "no seeds given");
  const std::uint64_t t_min = *std::min_element(config.horizons.begin(), config.horizons.end());
  if (t_min < 2) Fail(ErrorCode::kValidation, "every T must be at least 2");
  if (config.delta) {
    const double d = *config.delta;
    if (!(d > 0.0) || d > 1.0 / static_cast<double>(t_min)) {
      Fail(ErrorCode::kValidation, "delta must lie in (0, 1/min T]");
    }
  }
  if (config.algorithm.kind == AlgorithmKind::kFixedGrid && config.algorithm.grid_size < 2) {
    Fail(ErrorCode::kValidation, "fixed_grid needs m >= 2");
  }
  ValidateAdversarySpec(config.adversary);
}

CellResult RunCell(const ExperimentConfig& config, std::uint64_t horizon, std::uint64_t seed,
                   Transcript* transcript_out) {
  CellResult cell;
  cell.horizon = horizon;
  cell.seed = seed;
  cell.delta = config.delta.value_or(1.0 / static_cast<double>(horizon));
  const auto start = std::chrono::steady_clock::now();
  try {
    Adversary adv(config.adversary, seed);
    Transcript tr;
    switch (config.algorithm.kind) {
      case AlgorithmKind::kEfficient: {
        EfficientPredictor pred(horizon, cell.delta, seed);
        cell.gamma = pred.gamma();
        tr = PlayAdversarial(pred, adv, horizon, ActionPoints(pred.bins()));
        break;
      }
      case AlgorithmKind::kFixedGrid: {
        FixedGridPredictor pred(config.algorithm.grid_size, horizon, seed);
        std::vector<double> points(pred.grid_size());
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = pred.grid_point(i);
        tr = PlayAdversarial(pred, adv, horizon, points);
        tr.header.delta = cell.delta;
        break;
      }
      case AlgorithmKind::kTruthful: {
        TruthfulPredictor pred(horizon, cell.delta);
        cell.gamma = pred.gamma();
        tr = PlayOrderReversed(pred, adv, horizon);
        tr.header.seed = seed;
        break;
      }
    }
    tr.header.adversary = AdversarySpecJson(config.adversary);
    const Metrics m = ComputeMetrics(tr);
    cell.rounds = tr.rounds.size();
    cell.swap_regret = m.swap_regret;
    cell.external_regret = m.external;
    cell.cal_median = m.cal_median;
    cell.mcal1 = m.mcal1;
    cell.ok = true;
    if (transcript_out) *transcript_out = std::move(tr);
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.error = e.what();
  }
  cell.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

ExponentFit FitExponent(std::span<const std::pair<double, double>> xy) {
  std::vector<std::pair<double, double>> logs;
  std::set<double> distinct;
  for (const auto& [x, y] : xy) {
    if (!(y > 0.0)) continue;
    if (!(x > 0.0)) Fail(ErrorCode::kValidation, "fit needs positive x");
    logs.emplace_back(std::log(x), std::log(y));
    distinct.insert(x);
  }
  ExponentFit fit;
  if (logs.empty()) return fit;
  if (distinct.size() < 3) Fail(ErrorCode::kValidation, "fit needs at least 3 distinct T");
  const double n = static_cast<double>(logs.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [lx, ly] : logs) {
    mx += lx;
    my += ly;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [lx, ly] : logs) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  fit.beta = sxy / sxx;
  fit.c = std::exp(my - fit.beta * mx);
  fit.points = logs.size();
  return fit;
}

SweepResult Summarize(std::vector<CellResult> cells) {
  SweepResult sweep;
  std::map<std::uint64_t, std::vector<const CellResult*>> by_t;
  for (const CellResult& c : cells) by_t[c.horizon].push_back(&c);

  std::vector<std::pair<double, double>> sr_points;
  std::vector<std::pair<double, double>> cal_points;
  for (const auto& [t, group] : by_t) {
    HorizonSummary h;
    h.horizon = t;
    h.cells = group.size();
    std::vector<double> srs;
    double cal = 0.0;
    double mcal = 0.0;
    for (const CellResult* c : group) {
      if (!c->ok) {
        ++h.failed;
        continue;
      }
      srs.push_back(c->swap_regret);
      h.mean_swap_regret += c->swap_regret;
      cal += c->cal_median;
      mcal += c->mcal1;
    }
    const double ok = static_cast<double>(srs.size());
    if (ok > 0) {
      h.mean_swap_regret /= ok;
      h.mean_cal_median = cal / ok;
      h.mean_mcal1 = mcal / ok;
    } else {
      h.mean_swap_regret = h.mean_cal_median = h.mean_mcal1 = kNaN;
    }
    h.median_swap_regret = Median(srs);
    sweep.horizons.push_back(h);
    const double x = static_cast<double>(t);
    if (std::isfinite(h.mean_swap_regret)) sr_points.emplace_back(x, h.mean_swap_regret);
    if (std::isfinite(h.mean_cal_median)) cal_points.emplace_back(x, h.mean_cal_median);
  }
  sweep.swap_regret_fit = FitPositive(sr_points);
  sweep.cal_median_fit = FitPositive(cal_points);
  sweep.cells = std::move(cells);
  return sweep;
}

std::size_t DefaultJobs() {
  if (const char* env = std::getenv("SWAPREG_JOBS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult RunSweep(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                     std::size_t jobs) {
  ValidateExperimentConfig(config);
  if (jobs == 0) jobs = DefaultJobs();
  const bool write = !out_dir.empty();
  const std::filesystem::path tr_dir = out_dir / "transcripts";
  if (write) {
    std::error_code ec;
    std::filesystem::create_directories(config.write_transcripts ? tr_dir : out_dir, ec);
    if (ec) Fail(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " + ec.message());
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> work;
  for (std::uint64_t t : config.horizons) {
    for (std::uint64_t s : config.seeds) work.emplace_back(t, s);
  }
  std::vector<CellResult> cells(work.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      const auto [t, s] = work[i];
      const bool keep = write && config.write_transcripts;
      Transcript tr;
      cells[i] = RunCell(config, t, s, keep ? &tr : nullptr);
      if (keep && cells[i].ok) {
        const auto path = tr_dir / ("T" + std::to_string(t) + "_seed" + std::to_string(s) + ".jsonl");
        std::ofstream out(path);
        WriteJsonLines(tr, out);
        if (!out) {
          cells[i].ok = false;
          cells[i].error = "cannot write " + path.string();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t n = std::min(jobs, work.size());
    for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }

  SweepResult sweep = Summarize(std::move(cells));
  if (write) {
    std::ofstream csv(out_dir / "summary.csv");
    WriteSummaryCsv(sweep.cells, csv);
    json j = json::parse(SweepJson(sweep));
    j["config"] = {{"algorithm", AlgorithmJson(config.algorithm)},
                   {"adversary", json::parse(AdversarySpecJson(config.adversary))},
                   {"T", config.horizons},
                   {"delta", config.delta ? json(*config.delta) : json(nullptr)},
                   {"seeds", config.seeds}};
    std::ofstream js(out_dir / "sweep.json");
    js << j.dump(2) << '\n';
    if (!csv || !js) Fail(ErrorCode::kIo, "cannot write results to " + out_dir.string());
  }
  return sweep;
}

void WriteSummaryCsv(std::span<const CellResult> cells, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "T,seed,status,gamma,delta,rounds,swap_regret,external_regret,cal_median,mcal1,"
         "seconds,error\n";
  for (const CellResult& c : cells) {
    std::string err = c.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out << c.horizon << ',' << c.seed << ',' << (c.ok ? "ok" : "failed") << ',' << c.gamma
        << ',' << c.delta << ',' << c.rounds << ',' << c.swap_regret << ','
        << c.external_regret << ',' << c.cal_median << ',' << c.mcal1 << ',' << c.seconds
        << ',' << err << '\n';
  }
  out.precision(old_precision);
}

std::vector<CellResult> ReadSummaryCsv(std::istream& in) {
  std::vector<CellResult> cells;
  std::string line;
  if (!std::getline(in, line)) Fail(ErrorCode::kParse, "empty summary");
  const std::vector<std::string> header = SplitCsv(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"T", "seed", "swap_regret"}) {
    if (!col.count(need)) Fail(ErrorCode::kParse, std::string("summary lacks column ") + need);
  }
  const auto get = [&col](const std::vector<std::string>& f, const char* name) -> std::string {
    const auto it = col.find(name);
    return it != col.end() && it->second < f.size() ? f[it->second] : std::string();
  };
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsv(line);
    CellResult c;
    try {
      c.horizon = std::stoull(get(f, "T"));
      c.seed = std::stoull(get(f, "seed"));
      c.ok = get(f, "status").empty() || get(f, "status") == "ok";
      c.gamma = ParseDouble(get(f, "gamma"));
      c.delta = ParseDouble(get(f, "delta"));
      const std::string rounds = get(f, "rounds");
      c.rounds = rounds.empty() ? 0 : std::stoull(rounds);
      c.swap_regret = ParseDouble(get(f, "swap_regret"));
      c.external_regret = ParseDouble(get(f, "external_regret"));
      c.cal_median = ParseDouble(get(f, "cal_median"));
      c.mcal1 = ParseDouble(get(f, "mcal1"));
      c.seconds = ParseDouble(get(f, "seconds"));
      c.error = get(f, "error");
    } catch (const std::logic_error&) {
      Fail(ErrorCode::kParse, "summary line " + std::to_string(line_no) + " is malformed");
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

std::string SweepJson(const SweepResult& sweep) {
  json horizons = json::array();
  for (const HorizonSummary& h : sweep.horizons) {
    horizons.push_back({{"T", h.horizon},
                        {"cells", h.cells},
                        {"failed", h.failed},
                        {"mean_swap_regret", NumberOrNull(h.mean_swap_regret)},
                        {"median_swap_regret", NumberOrNull(h.median_swap_regret)},
                        {"mean_cal_median", NumberOrNull(h.mean_cal_median)},
                        {"mean_mcal1", NumberOrNull(h.mean_mcal1)}});
  }
  const auto fit = [](const ExponentFit& f) {
    return json{{"beta", f.beta}, {"c", f.c}, {"points", f.points}};
  };
  json failures = json::array();
  for (const CellResult& c : sweep.cells) {
    if (!c.ok) failures.push_back({{"T", c.horizon}, {"seed", c.seed}, {"error", c.error}});
  }
  const json j{{"horizons", std::move(horizons)},
               {"swap_regret_fit", fit(sweep.swap_regret_fit)},
               {"cal_median_fit", fit(sweep.cal_median_fit)},
               {"failures", std::move(failures)}};
  return j.dump();
}

VerifyReport VerifyTranscript(const Transcript& transcript) {
  VerifyReport report;
  report.algorithm = transcript.header.algorithm;
  report.rounds = transcript.rounds.size();
  if (report.rounds > transcript.header.horizon) {
    AddProblem(report, 0, "more rounds than the horizon");
  }
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    if (transcript.rounds[i].t != i + 1) {
      AddProblem(report, transcript.rounds[i].t, "rounds out of order");
      break;
    }
  }
  if (report.algorithm == "efficient") {
    VerifyEfficient(transcript, report);
  } else if (report.algorithm == "truthful") {
    VerifyTruthful(transcript, report);
  } else if (report.algorithm == "fixed_grid") {
    VerifyFixedGrid(transcript, report);
  } else {
    AddProblem(report, 0, "unknown algorithm '" + report.algorithm + "'");
  }
  const Metrics m = ComputeMetrics(transcript);
  report.swap_regret = m.swap_regret;
  report.external_regret = m.external;
  report.cal_median = m.cal_median;
  report.mcal1 = m.mcal1;
  return report;
}

std::string VerifyReportJson(const VerifyReport& report) {
  const json j{{"algorithm", report.algorithm},
               {"rounds", report.rounds},
               {"ok", report.ok},
               {"problems", report.problems},
               {"max_violation", report.max_violation},
               {"max_reward_error", report.max_reward_error},
               {"swap_regret", report.swap_regret},
               {"external_regret", report.external_regret},
               {"cal_median", NumberOrNull(report.cal_median)},
               {"mcal1", NumberOrNull(report.mcal1)}};
  return j.dump(2);
}

}  // namespace swapreg
