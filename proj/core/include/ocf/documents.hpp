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

#ifndef OCF_DOCUMENTS_HPP
#define OCF_DOCUMENTS_HPP

#include <span>
#include <string>
#include <vector>

#include "ocf/types.hpp"

namespace ocf {

/// n agent-contribution words (ids 0..n-1), then "gain" (id n) and "loss"
/// (id n+1).
struct Vocabulary {
  int n = 0;

  int size() const { return n + 2; }
  int agent_word(AgentId agent) const { return agent.index - 1; }
  int gain_word() const { return n; }
  int loss_word() const { return n + 1; }
  bool is_agent_word(int word) const { return word >= 0 && word < n; }
  /// "ag1" ... "agN", "gain", "loss".
  std::string label(int word) const;
  std::vector<std::string> labels() const;
};

struct WordCount {
  int word = 0;
  int count = 0;

  friend bool operator==(const WordCount&, const WordCount&) = default;
};

/// Bag-of-words document: sparse word counts sorted by word id.
class CoalitionDocument {
 public:
  CoalitionDocument() = default;
  explicit CoalitionDocument(std::vector<WordCount> counts);

  std::span<const WordCount> counts() const { return counts_; }
  int count(int word) const;
  std::int64_t length() const;
  std::size_t distinct_words() const { return counts_.size(); }

  friend bool operator==(const CoalitionDocument&, const CoalitionDocument&) = default;

 private:
  std::vector<WordCount> counts_;
};

/// Writes each member's word r_{j,C} times and the gain (loss) word |earned|
/// times. With utility_scale > 1 the utility count is ceil(|earned| / scale).
/// earned == 0 writes no utility word.
CoalitionDocument encode(const Coalition& coalition, Utility earned, const Vocabulary& vocab,
                         int utility_scale = 1);

struct DecodedDocument {
  Coalition coalition;
  /// Signed utility count (gain positive, loss negative).
  Utility earned = 0;
};

DecodedDocument decode(const CoalitionDocument& document, const Vocabulary& vocab);

/// One document per observation, in order. Throws InvalidArgument when an
/// observation does not contain `agent`.
std::vector<CoalitionDocument> batch_for_agent(AgentId agent,
                                               std::span<const Observation> formed,
                                               const Vocabulary& vocab, int utility_scale = 1);

/// "wordid:count" pairs separated by spaces.
std::string corpus_line(const CoalitionDocument& document);

}  // namespace ocf

#endif  // OCF_DOCUMENTS_HPP
