// Copyright 2026 The ocfsim Authors
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

#include "json.hpp"

#include "ocf/rr_engine.hpp"

namespace ocf {

using nlohmann::json;

std::string serialize_game(const RRGame& game) {
  json doc;
  doc["n"] = game.n();
  doc["endowments"] = std::vector<int>(game.endowments().begin(), game.endowments().end());
  doc["noise_prob"] = game.noise_prob();
  doc["noise_sigma"] = game.noise_sigma();
  json rules = json::array();
  for (const auto& rule : game.rules()) {
    std::vector<int> members;
    for (AgentId a : rule.members) members.push_back(a.index);
    rules.push_back({{"members", members}, {"value", rule.value}});
  }
  doc["rules"] = std::move(rules);
  return doc.dump();
}

RRGame parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("game document is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    auto endowments = doc.at("endowments").get<std::vector<int>>();
    if (static_cast<int>(endowments.size()) != n) {
      throw InvalidArgument("game document: endowments length differs from n");
    }
    std::vector<RelationalRule> rules;
    for (const auto& r : doc.at("rules")) {
      RelationalRule rule;
      for (int m : r.at("members").get<std::vector<int>>()) rule.members.push_back(AgentId{m});
      rule.value = r.at("value").get<double>();
      rules.push_back(std::move(rule));
    }
    return RRGame(std::move(endowments), std::move(rules), doc.at("noise_prob").get<double>(),
                  doc.at("noise_sigma").get<double>());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("game document: ") + e.what());
  }
}

}  // namespace ocf
