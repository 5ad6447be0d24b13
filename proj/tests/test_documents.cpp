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


#include <gtest/gtest.h>

#include "ocf/documents.hpp"
#include "ocf/rng.hpp"

namespace ocf {
namespace {

TEST(VocabularyTest, LayoutAndLabels) {
  const Vocabulary v{50};
  EXPECT_EQ(v.size(), 52);
  EXPECT_EQ(v.agent_word(AgentId{1}), 0);
  EXPECT_EQ(v.gain_word(), 50);
  EXPECT_EQ(v.loss_word(), 51);
  const auto labels = v.labels();
  ASSERT_EQ(labels.size(), 52u);
  EXPECT_EQ(labels.front(), "ag1");
  EXPECT_EQ(labels[49], "ag50");
  EXPECT_EQ(labels[50], "gain");
  EXPECT_EQ(labels[51], "loss");
  EXPECT_THROW(v.label(52), InvalidArgument);
}

TEST(Encode, LossDocument) {
  const Vocabulary v{2};
  const auto doc = encode(Coalition{{1, 3}, {2, 1}}, -3, v);
  EXPECT_EQ(doc, CoalitionDocument({{0, 3}, {1, 1}, {3, 3}}));
  EXPECT_EQ(doc.length(), 7);
}

TEST(Encode, GainDocument) {
  const Vocabulary v{3};
  const auto doc = encode(Coalition{{1, 1}, {2, 1}, {3, 2}}, 4, v);
  EXPECT_EQ(doc, CoalitionDocument({{0, 1}, {1, 1}, {2, 2}, {3, 4}}));
  EXPECT_EQ(doc.length(), 8);
}

TEST(Encode, ZeroUtilityWritesNoUtilityWord) {
  const Vocabulary v{3};
  const auto doc = encode(Coalition{{1, 1}}, 0, v);
  EXPECT_EQ(doc, CoalitionDocument({{0, 1}}));
  EXPECT_EQ(doc.count(v.gain_word()), 0);
  EXPECT_EQ(doc.count(v.loss_word()), 0);
}

TEST(Encode, UtilityScaleUsesCeiling) {
  const Vocabulary v{2};
  EXPECT_EQ(encode(Coalition{{1, 2}}, 25, v, 10).count(v.gain_word()), 3);
  EXPECT_EQ(encode(Coalition{{1, 2}}, -1, v, 10).count(v.loss_word()), 1);
  EXPECT_EQ(encode(Coalition{{1, 2}}, 30, v, 10).count(v.gain_word()), 3);
  EXPECT_THROW(encode(Coalition{{1, 2}}, 1, v, 0), InvalidArgument);
}

TEST(Encode, RejectsOutOfVocabularyMembers) {
  EXPECT_THROW(encode(Coalition{{3, 1}}, 0, Vocabulary{2}), InvalidArgument);
  EXPECT_THROW(encode(Coalition{}, 0, Vocabulary{2}), InvalidArgument);
}

TEST(Decode, RoundTripsRandomDocuments) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const int n = uniform_int(rng, 1, 60);
    const Vocabulary v{n};
    std::vector<Contribution> members;
    for (int a = 1; a <= n; ++a) {
      if (bernoulli(rng, 0.3)) members.push_back({AgentId{a}, uniform_int(rng, 1, 600)});
    }
    if (members.empty()) members.push_back({AgentId{n}, 1});
    const Coalition c(std::move(members));
    const Utility earned = uniform_int(rng, -5000, 5000);
    const auto doc = encode(c, earned, v);
    const auto back = decode(doc, v);
    EXPECT_EQ(back.coalition, c);
    EXPECT_EQ(back.earned, earned);
    EXPECT_EQ(doc.length(), c.total() + (earned < 0 ? -earned : earned));
  }
}

TEST(Decode, DistinctInputsGiveDistinctDocuments) {
  const Vocabulary v{3};
  EXPECT_NE(encode(Coalition{{1, 2}}, 3, v), encode(Coalition{{1, 2}}, -3, v));
  EXPECT_NE(encode(Coalition{{1, 2}}, 3, v), encode(Coalition{{1, 3}}, 3, v));
  EXPECT_NE(encode(Coalition{{1, 2}}, 3, v), encode(Coalition{{2, 2}}, 3, v));
}

TEST(DocumentTest, RejectsMalformedCounts) {
  EXPECT_THROW(CoalitionDocument({{0, 0}}), InvalidArgument);
  EXPECT_THROW(CoalitionDocument({{0, 1}, {0, 2}}), InvalidArgument);
}

TEST(BatchForAgent, OneDocumentPerJoinedCoalition) {
  const Vocabulary v{4};
  const std::vector<Observation> formed = {
      {Coalition{{1, 2}, {2, 1}}, 5}, {Coalition{{1, 1}, {3, 1}}, -1}, {Coalition{{1, 4}}, 0}};
  const auto batch = batch_for_agent(AgentId{1}, formed, v);
  ASSERT_EQ(batch.size(), 3u);
  for (std::size_t i = 0; i < formed.size(); ++i) {
    EXPECT_EQ(batch[i], encode(formed[i].coalition, formed[i].value, v));
  }
  EXPECT_TRUE(batch_for_agent(AgentId{1}, {}, v).empty());
}

TEST(BatchForAgent, RejectsNonMemberCoalitions) {
  const Vocabulary v{4};
  const std::vector<Observation> formed = {{Coalition{{1, 2}, {2, 1}}, 5},
                                           {Coalition{{3, 1}, {4, 1}}, 2}};
  EXPECT_THROW(batch_for_agent(AgentId{1}, formed, v), InvalidArgument);
}

TEST(CorpusLine, WordCountPairs) {
  const Vocabulary v{2};
  EXPECT_EQ(corpus_line(encode(Coalition{{1, 3}, {2, 1}}, -3, v)), "0:3 1:1 3:3");
}

}  // namespace
}  // namespace ocf
