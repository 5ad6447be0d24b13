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

#include "ocf/documents.hpp"

#include <algorithm>
#include <cstdlib>

namespace ocf {

std::string Vocabulary::label(int word) const {
  if (word == gain_word()) return "gain";
  if (word == loss_word()) return "loss";
  if (!is_agent_word(word)) throw InvalidArgument("word id outside vocabulary");
  return "ag" + std::to_string(word + 1);
}

std::vector<std::string> Vocabulary::labels() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int w = 0; w < size(); ++w) out.push_back(label(w));
  return out;
}

CoalitionDocument::CoalitionDocument(std::vector<WordCount> counts) : counts_(std::move(counts)) {
  std::sort(counts_.begin(), counts_.end(),
            [](const WordCount& a, const WordCount& b) { return a.word < b.word; });
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i].count < 1) throw InvalidArgument("document word counts must be >= 1");
    if (i > 0 && counts_[i - 1].word == counts_[i].word) {
      throw InvalidArgument("duplicate word in document");
    }
  }
}

int CoalitionDocument::count(int word) const {
  for (const auto& wc : counts_) {
    if (wc.word == word) return wc.count;
  }
  return 0;
}

std::int64_t CoalitionDocument::length() const {
  std::int64_t total = 0;
  for (const auto& wc : counts_) total += wc.count;
  return total;
}

CoalitionDocument encode(const Coalition& coalition, Utility earned, const Vocabulary& vocab,
                         int utility_scale) {
  if (coalition.empty()) throw InvalidArgument("cannot encode an empty coalition");
  if (utility_scale < 1) throw InvalidArgument("utility scale must be >= 1");
  std::vector<WordCount> counts;
  counts.reserve(coalition.size() + 1);
  for (const auto& m : coalition.members()) {
    if (m.agent.index > vocab.n) throw InvalidArgument("coalition member outside vocabulary");
    counts.push_back({vocab.agent_word(m.agent), m.amount});
  }
  if (earned != 0) {
    const Utility magnitude = earned > 0 ? earned : -earned;
    const Utility scaled = (magnitude + utility_scale - 1) / utility_scale;
    counts.push_back({earned > 0 ? vocab.gain_word() : vocab.loss_word(),
                      static_cast<int>(scaled)});
  }
  return CoalitionDocument(std::move(counts));
}

DecodedDocument decode(const CoalitionDocument& document, const Vocabulary& vocab) {
  std::vector<Contribution> members;
  Utility earned = 0;
  for (const auto& wc : document.counts()) {
    if (vocab.is_agent_word(wc.word)) {
      members.push_back({AgentId{wc.word + 1}, wc.count});
    } else if (wc.word == vocab.gain_word()) {
      earned += wc.count;
    } else if (wc.word == vocab.loss_word()) {
      earned -= wc.count;
    } else {
      throw InvalidArgument("word id outside vocabulary");
    }
  }
  return {Coalition(std::move(members)), earned};
}

std::vector<CoalitionDocument> batch_for_agent(AgentId agent,
                                               std::span<const Observation> formed,
                                               const Vocabulary& vocab, int utility_scale) {
  std::vector<CoalitionDocument> batch;
  batch.reserve(formed.size());
  for (const auto& obs : formed) {
    if (!obs.coalition.contains(agent)) {
      throw InvalidArgument("agent " + std::to_string(agent.index) +
                            " is not a member of an observed coalition");
    }
    batch.push_back(encode(obs.coalition, obs.value, vocab, utility_scale));
  }
  return batch;
}

std::string corpus_line(const CoalitionDocument& document) {
  std::string line;
  for (const auto& wc : document.counts()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(wc.word);
    line += ':';
    line += std::to_string(wc.count);
  }
  return line;
}

}  // namespace ocf
