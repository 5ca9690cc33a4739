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

#include "swapreg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "swapreg/error.hpp"

namespace swapreg {
namespace {

using Groups = std::map<double, std::vector<std::size_t>>;

Groups GroupByPrediction(std::span<const double> predictions) {
  Groups groups;
  for (std::size_t t = 0; t < predictions.size(); ++t) {
    const double p = predictions[t];
    if (!(p >= 0.0 && p <= 1.0)) {
      Fail(ErrorCode::kDomain, "prediction outside [0,1]: " + std::to_string(p));
    }
    groups[p].push_back(t);
  }
  return groups;
}

double SumAt(std::span<const VMixture> losses, const std::vector<std::size_t>& rounds,
             double s) {
  double acc = 0.0;
  for (std::size_t t : rounds) acc += ExpectedAbs(losses[t].phi, s);
  return acc;
}

// Minimizes the pooled sum over the rounds. The weighted median is exact in
// real arithmetic; its distinct neighbours are also scored so that rounding
// in the cumulative masses cannot cost a step.
std::pair<double, double> BestFixed(std::span<const VMixture> losses,
                                    const std::vector<std::size_t>& rounds) {
  std::vector<std::pair<double, double>> atoms;
  for (std::size_t t : rounds) {
    const Dist01& phi = losses[t].phi;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      atoms.emplace_back(phi.support()[i], phi.mass()[i]);
    }
  }
  const double median = LeftWeightedMedian(atoms);
  std::vector<double> points;
  points.reserve(atoms.size());
  for (const auto& a : atoms) points.push_back(a.first);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const auto it = std::lower_bound(points.begin(), points.end(), median);

  double best_point = median;
  double best = SumAt(losses, rounds, median);
  if (it != points.begin()) {
    const double left = *(it - 1);
    const double v = SumAt(losses, rounds, left);
    if (v < best) best = v, best_point = left;
  }
  if (it != points.end() && it + 1 != points.end()) {
    const double right = *(it + 1);
    const double v = SumAt(losses, rounds, right);
    if (v < best) best = v, best_point = right;
  }
  return {best_point, best};
}

void CheckOutcomes(std::span<const double> predictions, std::span<const double> outcomes) {
  if (predictions.size() != outcomes.size()) {
    Fail(ErrorCode::kDomain, "predictions and outcomes differ in length");
  }
  for (double y : outcomes) {
    if (!(y >= 0.0 && y <= 1.0)) {
      Fail(ErrorCode::kDomain, "outcome outside [0,1]: " + std::to_string(y));
    }
  }
}

double SumScore(const ScoringRule& rule, double p, const std::vector<double>& ys) {
  double acc = 0.0;
  for (double y : ys) acc += ScoreValue(rule, p, y);
  return acc;
}

// Smallest order statistic whose empirical cdf reaches z.
double EmpiricalQuantile(const std::vector<double>& sorted, double z) {
  const double n = static_cast<double>(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (static_cast<double>(k + 1) >= z * n) return sorted[k];
  }
  return sorted.back();
}

}  // namespace

RegretReport SwapRegret(std::span<const double> predictions, std::span<const VMixture> losses) {
  if (predictions.size() != losses.size()) {
    Fail(ErrorCode::kDomain, "predictions and losses differ in length");
  }
  RegretReport report;
  if (predictions.empty()) return report;

  double played_total = 0.0;
  for (const auto& [p, rounds] : GroupByPrediction(predictions)) {
    BinRegret bin;
    bin.p = p;
    bin.count = rounds.size();
    bin.played = SumAt(losses, rounds, p);
    std::tie(bin.best_point, bin.best) = BestFixed(losses, rounds);
    if (bin.played <= bin.best) {
      bin.best_point = p;
      bin.best = bin.played;
    }
    bin.contribution = bin.played - bin.best;
    report.total += bin.contribution;
    played_total += bin.played;
    report.bins.push_back(bin);
  }

  std::vector<std::size_t> all(predictions.size());
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
  const auto [point, best] = BestFixed(losses, all);
  report.external_point = point;
  report.external = played_total - best;
  return report;
}

RegretReport SwapRegret(const Transcript& transcript) {
  std::vector<double> predictions;
  std::vector<VMixture> losses;
  predictions.reserve(transcript.rounds.size());
  losses.reserve(transcript.rounds.size());
  for (const RoundRecord& rec : transcript.rounds) {
    predictions.push_back(rec.p);
    losses.push_back(rec.loss);
  }
  return SwapRegret(predictions, losses);
}

double CalError(const ScoringRule& rule, std::span<const double> predictions,
                 std::span<const double> outcomes) {
  CheckOutcomes(predictions, outcomes);
  if (rule.kind == ScoringKind::kQuantile && !(rule.q > 0.0 && rule.q < 1.0)) {
    Fail(ErrorCode::kDomain, "quantile level must lie in (0,1)");
  }
  double total = 0.0;
  for (const auto& [p, rounds] : GroupByPrediction(predictions)) {
    std::vector<double> ys;
    ys.reserve(rounds.size());
    for (std::size_t t : rounds) ys.push_back(outcomes[t]);
    const double n = static_cast<double>(ys.size());

    if (rule.kind == ScoringKind::kMean) {
      double mean = 0.0;
      for (double y : ys) mean += y;
      mean /= n;
      total += n * (p - mean) * (p - mean);
      continue;
    }

    std::vector<double> sorted = ys;
    std::sort(sorted.begin(), sorted.end());
    const double z = rule.kind == ScoringKind::kMedian ? 0.5 : rule.q;
    const double star = EmpiricalQuantile(sorted, z);
    const double played = SumScore(rule, p, ys);
    double best = std::min(played, SumScore(rule, star, ys));
    // Same guard against a rounding slip in z * n as in BestFixed.
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), star);
    if (it != sorted.begin()) best = std::min(best, SumScore(rule, *(it - 1), ys));
    const auto up = std::upper_bound(sorted.begin(), sorted.end(), star);
    if (up != sorted.end()) best = std::min(best, SumScore(rule, *up, ys));
    total += played - best;
  }
  return total;
}

double Mcal1Median(std::span<const double> predictions, std::span<const double> outcomes) {
  CheckOutcomes(predictions, outcomes);
  double total = 0.0;
  for (const auto& [p, rounds] : GroupByPrediction(predictions)) {
    std::int64_t at_most = 0;
    for (std::size_t t : rounds) at_most += outcomes[t] <= p ? 1 : 0;
    const std::int64_t n = static_cast<std::int64_t>(rounds.size());
    total += static_cast<double>(std::llabs(2 * at_most - n));
  }
  return total;
}

std::string RegretReportJson(const RegretReport& report) {
  nlohmann::json bins = nlohmann::json::array();
  for (const BinRegret& b : report.bins) {
    bins.push_back({{"p", b.p},
                    {"count", b.count},
                    {"best_point", b.best_point},
                    {"played", b.played},
                    {"best", b.best},
                    {"contribution", b.contribution}});
  }
  const nlohmann::json j{{"swap_regret", report.total},
                         {"external_regret", report.external},
                         {"external_point", report.external_point},
                         {"bins", std::move(bins)}};
  return j.dump();
}

void WriteBinTableCsv(const RegretReport& report, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "p,count,best_point,played,best,contribution\n";
  for (const BinRegret& b : report.bins) {
    out << b.p << ',' << b.count << ',' << b.best_point << ',' << b.played << ',' << b.best
        << ',' << b.contribution << '\n';
  }
  out.precision(old_precision);
}

}  // namespace swapreg
