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

#include "swapreg/adversaries.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "swapreg/error.hpp"

namespace swapreg {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void CheckUnit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    Fail(ErrorCode::kDomain, std::string(what) + " must lie in [0,1], got " + std::to_string(x));
  }
}

double GapPoint(const UniformGap& g, std::uint32_t k) {
  return g.lo + (g.hi - g.lo) * static_cast<double>(k + 1) / (g.grid_points + 1);
}

double FarEndpoint(double x) { return x < 0.5 ? 1.0 : 0.0; }

AdaptiveRule BuiltinRule(const std::string& name) {
  if (name == "chase_last") {
    return [](const AdversaryView& view) {
      if (view.past_predictions.empty()) return 1.0;
      return FarEndpoint(view.past_predictions.back());
    };
  }
  if (name == "anti_kappa") {
    return [](const AdversaryView& view) {
      double mean = 0.0;
      for (std::size_t i = 0; i < view.kappa.size(); ++i) {
        mean += view.kappa[i] * view.action_points[i];
      }
      return FarEndpoint(mean);
    };
  }
  Fail(ErrorCode::kDomain, "unknown adaptive rule '" + name + "'");
}

}  // namespace

void ValidateAdversarySpec(const AdversarySpec& spec) {
  std::visit(Overloaded{
                 [](const FixedV& s) { CheckUnit(s.v, "v"); },
                 [](const TwoPoint& s) {
                   CheckUnit(s.b, "b");
                   if (s.b > 0.5) Fail(ErrorCode::kDomain, "two_point needs b <= 1/2");
                   if (!(s.epsilon >= 0.0 && s.epsilon < 0.5)) {
                     Fail(ErrorCode::kDomain, "epsilon must lie in [0, 1/2)");
                   }
                 },
                 [](const BernoulliMedian& s) { CheckUnit(s.bias, "bias"); },
                 [](const UniformGap& s) {
                   CheckUnit(s.lo, "lo");
                   CheckUnit(s.hi, "hi");
                   if (!(s.lo < s.hi)) Fail(ErrorCode::kDomain, "uniform_gap needs lo < hi");
                   if (s.grid_points < 1) Fail(ErrorCode::kDomain, "grid_points must be >= 1");
                 },
                 [](const Adaptive& s) { BuiltinRule(s.rule); },
             },
             spec);
}

AdversarySpec ParseAdversarySpec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("adversary spec: ") + e.what());
  }
  AdversarySpec spec;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed_v") {
      spec = FixedV{j.at("v").get<double>()};
    } else if (kind == "two_point") {
      spec = TwoPoint{j.at("b").get<double>(), j.value("epsilon", 0.0)};
    } else if (kind == "bernoulli_median") {
      spec = BernoulliMedian{j.value("bias", 0.5)};
    } else if (kind == "uniform_gap") {
      spec = UniformGap{j.at("lo").get<double>(), j.at("hi").get<double>(),
                        j.value("grid_points", 101u)};
    } else if (kind == "adaptive") {
      spec = Adaptive{j.value("rule", std::string("anti_kappa"))};
    } else {
      Fail(ErrorCode::kParse, "unknown adversary kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("adversary spec: ") + e.what());
  }
  ValidateAdversarySpec(spec);
  return spec;
}

std::string AdversarySpecJson(const AdversarySpec& spec) {
  const json j = std::visit(
      Overloaded{
          [](const FixedV& s) { return json{{"kind", "fixed_v"}, {"v", s.v}}; },
          [](const TwoPoint& s) {
            return json{{"kind", "two_point"}, {"b", s.b}, {"epsilon", s.epsilon}};
          },
          [](const BernoulliMedian& s) {
            return json{{"kind", "bernoulli_median"}, {"bias", s.bias}};
          },
          [](const UniformGap& s) {
            return json{{"kind", "uniform_gap"},
                        {"lo", s.lo},
                        {"hi", s.hi},
                        {"grid_points", s.grid_points}};
          },
          [](const Adaptive& s) { return json{{"kind", "adaptive"}, {"rule", s.rule}}; },
      },
      spec);
  return j.dump();
}

Adversary::Adversary(AdversarySpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed, RngStream::kAdversary) {
  ValidateAdversarySpec(spec_);
  if (const auto* a = std::get_if<Adaptive>(&spec_)) adaptive_ = BuiltinRule(a->rule);
}

EmittedLoss Adversary::NextLoss(const AdversaryView& view) {
  const auto vshape = [](double v) { return EmittedLoss{PLConvexLoss::VShape(v), v}; };
  return std::visit(
      Overloaded{
          [&](const FixedV& s) { return vshape(s.v); },
          [&](const TwoPoint& s) {
            const bool low = rng_.NextDouble() < 0.5 + s.epsilon;
            return vshape(low ? s.b : s.b + 0.5);
          },
          [&](const BernoulliMedian& s) {
            return vshape(rng_.NextDouble() < s.bias ? 1.0 : 0.0);
          },
          [&](const UniformGap& s) {
            const auto k = std::min<std::uint32_t>(
                s.grid_points - 1,
                static_cast<std::uint32_t>(rng_.NextDouble() * s.grid_points));
            return vshape(GapPoint(s, k));
          },
          [&](const Adaptive&) {
            const double v = adaptive_(view);
            CheckUnit(v, "adaptive target");
            return vshape(v);
          },
      },
      spec_);
}

LossMixture Adversary::NextMixture(std::uint64_t /*t*/) {
  LossMixture out;
  const auto add = [&out](double v, double w) {
    out.losses.push_back(PLConvexLoss::VShape(v));
    out.weights.push_back(w);
    out.outcomes.push_back(v);
  };
  std::visit(Overloaded{
                 [&](const FixedV& s) { add(s.v, 1.0); },
                 [&](const TwoPoint& s) {
                   add(s.b, 0.5 + s.epsilon);
                   add(s.b + 0.5, 0.5 - s.epsilon);
                 },
                 [&](const BernoulliMedian& s) {
                   add(0.0, 1.0 - s.bias);
                   add(1.0, s.bias);
                 },
                 [&](const UniformGap& s) {
                   for (std::uint32_t k = 0; k < s.grid_points; ++k) {
                     add(GapPoint(s, k), 1.0 / s.grid_points);
                   }
                 },
                 [&](const Adaptive&) {
                   Fail(ErrorCode::kDomain,
                        "adaptive adversaries are only defined for the adversarial protocol");
                 },
             },
             spec_);
  return out;
}

EmittedLoss Adversary::Draw(const LossMixture& mixture) {
  const std::size_t k = SampleIndex(mixture.weights, rng_.NextDouble());
  std::optional<double> outcome;
  if (k < mixture.outcomes.size()) outcome = mixture.outcomes[k];
  return EmittedLoss{mixture.losses[k], outcome};
}

}  // namespace swapreg
