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

#include "swapreg/transcript.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "swapreg/error.hpp"

namespace swapreg {
namespace {

using nlohmann::json;

json SparseToJson(const std::vector<SparseEntry>& entries, const char* value_key) {
  json idx = json::array();
  json val = json::array();
  for (const auto& e : entries) {
    idx.push_back(e.index);
    val.push_back(e.value);
  }
  return json{{"idx", std::move(idx)}, {value_key, std::move(val)}};
}

std::vector<SparseEntry> SparseFromJson(const json& j, const char* value_key) {
  std::vector<SparseEntry> out;
  const auto& idx = j.at("idx");
  const auto& val = j.at(value_key);
  if (idx.size() != val.size()) Fail(ErrorCode::kParse, "sparse vector length mismatch");
  out.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.push_back({idx[i].get<std::size_t>(), val[i].get<double>()});
  }
  return out;
}

json HeaderToJson(const TranscriptHeader& h) {
  json adversary = h.adversary.empty() ? json(nullptr) : json::parse(h.adversary);
  return json{{"algorithm", h.algorithm}, {"T", h.horizon},       {"delta", h.delta},
              {"gamma", h.gamma},         {"seed", h.seed},        {"grid_size", h.grid_size},
              {"adversary", adversary}};
}

}  // namespace

void WriteJsonLines(const Transcript& transcript, std::ostream& out) {
  out << json{{"header", HeaderToJson(transcript.header)}}.dump() << '\n';
  for (const RoundRecord& rec : transcript.rounds) {
    json loss{{"support", json(std::vector<double>(rec.loss.phi.support().begin(),
                                                   rec.loss.phi.support().end()))},
              {"mass", json(std::vector<double>(rec.loss.phi.mass().begin(),
                                                rec.loss.phi.mass().end()))},
              {"offset", rec.loss.offset}};
    json line{{"t", rec.t},
              {"kappa", SparseToJson(rec.kappa, "p")},
              {"action", rec.action},
              {"r", rec.r},
              {"b", rec.b},
              {"p", rec.p},
              {"loss", std::move(loss)},
              {"outcome", rec.outcome ? json(*rec.outcome) : json(nullptr)}};
    if (!rec.rewards.empty()) line["rewards"] = SparseToJson(rec.rewards, "u");
    out << line.dump() << '\n';
  }
}

Transcript ReadJsonLines(std::istream& in) {
  Transcript out;
  std::string text;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    try {
      const json j = json::parse(text);
      if (j.contains("header")) {
        const json& h = j.at("header");
        out.header.algorithm = h.at("algorithm").get<std::string>();
        out.header.horizon = h.at("T").get<std::uint64_t>();
        out.header.delta = h.at("delta").get<double>();
        out.header.gamma = h.at("gamma").get<double>();
        out.header.seed = h.at("seed").get<std::uint64_t>();
        out.header.grid_size = h.value("grid_size", 0u);
        out.header.adversary = h.contains("adversary") && !h.at("adversary").is_null()
                                   ? h.at("adversary").dump()
                                   : std::string();
        have_header = true;
        continue;
      }
      RoundRecord rec;
      rec.t = j.at("t").get<std::uint64_t>();
      rec.kappa = SparseFromJson(j.at("kappa"), "p");
      rec.action = j.at("action").get<std::size_t>();
      rec.r = j.at("r").get<double>();
      rec.b = j.at("b").get<double>();
      rec.p = j.at("p").get<double>();
      const json& loss = j.at("loss");
      rec.loss = VMixture{Dist01::FromAtoms(loss.at("support").get<std::vector<double>>(),
                                            loss.at("mass").get<std::vector<double>>(),
                                            /*renormalize=*/false),
                          loss.at("offset").get<double>()};
      if (j.contains("outcome") && !j.at("outcome").is_null()) {
        rec.outcome = j.at("outcome").get<double>();
      }
      if (j.contains("rewards")) rec.rewards = SparseFromJson(j.at("rewards"), "u");
      out.rounds.push_back(std::move(rec));
    } catch (const json::exception& e) {
      Fail(ErrorCode::kParse, "transcript line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) Fail(ErrorCode::kParse, "transcript has no header line");
  return out;
}

void WriteCsv(const Transcript& transcript, std::ostream& out) {
  out << "t,r,b,p,loss_at_p,loss_offset,loss_atoms,outcome\n";
  const auto old_precision = out.precision(17);
  for (const RoundRecord& rec : transcript.rounds) {
    out << rec.t << ',' << rec.r << ',' << rec.b << ',' << rec.p << ',' << rec.loss(rec.p)
        << ',' << rec.loss.offset << ',' << rec.loss.phi.size() << ',';
    if (rec.outcome) out << *rec.outcome;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace swapreg
