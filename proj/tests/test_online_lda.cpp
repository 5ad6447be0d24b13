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


#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>
#include <gtest/gtest.h>

#include "ocf/digamma.hpp"
#include "ocf/online_lda.hpp"
#include "ocf/rng.hpp"
#include "support/oracles.hpp"

namespace ocf {
namespace {

TEST(Digamma, MatchesBoostOnPositiveArguments) {
  for (double x = 1e-3; x < 2000.0; x *= 1.0137) {
    const double expected = boost::math::digamma(x);
    EXPECT_NEAR(digamma(x), expected, 1e-10 * std::max(1.0, std::abs(expected))) << "x=" << x;
  }
}

TEST(Digamma, MatchesBoostOnNegativeNonIntegers) {
  for (double x = -9.75; x < 0.0; x += 0.5) {
    const double expected = boost::math::digamma(x);
    EXPECT_NEAR(digamma(x), expected, 1e-9 * std::max(1.0, std::abs(expected))) << "x=" << x;
  }
}

TEST(Digamma, KnownValuesAndPoles) {
  EXPECT_NEAR(digamma(1.0), -0.57721566490153286, 1e-14);
  EXPECT_NEAR(digamma(0.5), -0.57721566490153286 - 2.0 * std::numbers::ln2, 1e-14);
  EXPECT_TRUE(std::isnan(digamma(0.0)));
  EXPECT_TRUE(std::isnan(digamma(-3.0)));
}

LdaConfig toy_config(int topics) {
  auto c = LdaConfig::for_topics(topics);
  c.d_estimate = 1000;
  return c;
}

TEST(InitState, ShapeAndPositivity) {
  Rng rng(31);
  const auto state = init_state(LdaConfig::for_topics(15), 52, rng);
  EXPECT_EQ(state.topics(), 15);
  EXPECT_EQ(state.vocab_size(), 52);
  EXPECT_EQ(state.batch_counter, 1);
  EXPECT_TRUE((state.lambda.array() > 0.0).all());
  const auto beta = topics(state);
  for (int k = 0; k < beta.topics(); ++k) EXPECT_NEAR(beta.beta.row(k).sum(), 1.0, 1e-9);
}

TEST(InitState, SameSeedSameLambda) {
  Rng a(32);
  Rng b(32);
  EXPECT_EQ(init_state(LdaConfig{}, 52, a).lambda, init_state(LdaConfig{}, 52, b).lambda);
}

TEST(InitState, RejectsBadConfig) {
  Rng rng(33);
  auto c = LdaConfig::for_topics(3);
  EXPECT_THROW(init_state(c, 1, rng), InvalidArgument);
  c.kappa = 1.5;
  EXPECT_THROW(init_state(c, 5, rng), InvalidArgument);
  c = LdaConfig::for_topics(3);
  c.alpha = 0.0;
  EXPECT_THROW(init_state(c, 5, rng), InvalidArgument);
}

TEST(Topics, RowNormalisation) {
  LdaState state;
  state.lambda.resize(2, 3);
  state.lambda << 1, 1, 2, 5, 5, 5;
  const auto beta = topics(state);
  EXPECT_DOUBLE_EQ(beta(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(beta(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(beta(0, 2), 0.5);
  for (int w = 0; w < 3; ++w) EXPECT_DOUBLE_EQ(beta(1, w), 1.0 / 3.0);
}

TEST(EStep, SingleTopicIsForced) {
  Rng rng(34);
  const auto config = toy_config(1);
  const auto state = init_state(config, 5, rng);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{0, 3}, {2, 4}, {4, 1}})};
  const auto res = e_step(state, config, batch);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_TRUE((res[0].phi.array() == 1.0).all());
  EXPECT_DOUBLE_EQ(res[0].gamma(0), config.alpha + 8.0);
}

TEST(EStep, SymmetricStateGivesEqualGamma) {
  const auto config = toy_config(4);
  LdaState state;
  state.lambda = Eigen::MatrixXd::Constant(4, 6, 0.7);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{1, 5}, {3, 2}, {5, 9}})};
  const auto res = e_step(state, config, batch);
  for (int k = 1; k < 4; ++k) EXPECT_DOUBLE_EQ(res[0].gamma(k), res[0].gamma(0));
}

TEST(EStep, RowsSumToOneAndGammaAtLeastAlpha) {
  Rng rng(35);
  // Near-uniform initial topics need about 150 sweeps on these documents.
  auto config = toy_config(5);
  config.max_e_iters = 1000;
  const auto state = init_state(config, 8, rng);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{0, 30}, {7, 2}}),
                                                CoalitionDocument({{1, 1}, {2, 1}, {6, 40}})};
  for (const auto& res : e_step(state, config, batch)) {
    for (Eigen::Index r = 0; r < res.phi.rows(); ++r) EXPECT_NEAR(res.phi.row(r).sum(), 1.0, 1e-12);
    EXPECT_TRUE((res.gamma.array() >= config.alpha).all());
    EXPECT_TRUE(res.converged);
  }
}

TEST(EStep, RandomGammaInitNeedsEngine) {
  Rng rng(36);
  auto config = toy_config(3);
  config.gamma_init = GammaInit::kRandom;
  const auto state = init_state(config, 4, rng);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{0, 2}})};
  EXPECT_THROW(e_step(state, config, batch), InvalidArgument);
  Rng a(37);
  Rng b(37);
  EXPECT_EQ(e_step(state, config, batch, &a)[0].gamma, e_step(state, config, batch, &b)[0].gamma);
}

TEST(StepSize, FirstStep) {
  const auto config = LdaConfig::for_topics(15);
  // 201^-0.9 = 0.0084552.
  EXPECT_NEAR(step_size(config, 1), 0.0084552, 5e-7);
  EXPECT_DOUBLE_EQ(step_size(config, 1), std::pow(201.0, -0.9));
  EXPECT_LT(step_size(config, 1000000), step_size(config, 1000));
}

TEST(StepSize, RobbinsMonroTruncations) {
  const auto config = LdaConfig::for_topics(15);
  double sum = 0.0;
  double sq = 0.0;
  double sum_at_1e4 = 0.0;
  double sq_at_1e6 = 0.0;
  for (std::int64_t t = 1; t <= 10'000'000; ++t) {
    const double rho = step_size(config, t);
    sum += rho;
    sq += rho * rho;
    if (t == 10'000) sum_at_1e4 = sum;
    if (t == 1'000'000) sq_at_1e6 = sq;
  }
  // The plain sum keeps growing; the squared sum has a vanishing tail.
  EXPECT_GT(sum, 2.5 * sum_at_1e4);
  EXPECT_LT(sq - sq_at_1e6, 1e-4);
}

std::vector<int> dense(const CoalitionDocument& doc, int vocab) {
  std::vector<int> out(static_cast<std::size_t>(vocab), 0);
  for (const auto& wc : doc.counts()) out[static_cast<std::size_t>(wc.word)] = wc.count;
  return out;
}

oracle::Dense to_dense(const Eigen::MatrixXd& m) {
  oracle::Dense out(static_cast<std::size_t>(m.rows()), std::vector<double>(m.cols()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    for (Eigen::Index w = 0; w < m.cols(); ++w) out[k][w] = m(k, w);
  }
  return out;
}

TEST(Update, MatchesStraightLineTranscription) {
  Rng rng(38);
  for (int corpus = 0; corpus < 20; ++corpus) {
    const int topics_k = uniform_int(rng, 2, 4);
    const int vocab = uniform_int(rng, 3, 7);
    LdaConfig config = LdaConfig::for_topics(topics_k);
    config.d_estimate = uniform_int(rng, 10, 5000);
    config.tau0 = uniform_int(rng, 1, 300);
    config.kappa = 0.6 + 0.4 * uniform01(rng);
    oracle::StraightLineConfig ref{config.alpha, config.eta, config.tau0, config.kappa,
                                   static_cast<double>(config.d_estimate), config.gamma_tol,
                                   config.max_e_iters};

    auto state = init_state(config, vocab, rng);
    auto lambda = to_dense(state.lambda);
    for (int step = 0; step < 25; ++step) {
      std::vector<WordCount> counts;
      for (int w = 0; w < vocab; ++w) {
        if (bernoulli(rng, 0.6)) counts.push_back({w, uniform_int(rng, 1, 12)});
      }
      if (counts.empty()) counts.push_back({0, 1});
      const std::vector<CoalitionDocument> batch = {CoalitionDocument(counts)};

      const auto expected = oracle::straight_line_step(lambda, state.batch_counter,
                                                       dense(batch[0], vocab), ref);
      const auto estep = e_step(state, config, batch);
      for (int k = 0; k < topics_k; ++k) {
        EXPECT_NEAR(estep[0].gamma(k), expected.gamma[k], 1e-8 * std::abs(expected.gamma[k]));
      }
      EXPECT_EQ(estep[0].iterations, expected.iterations);

      state = update(std::move(state), config, batch);
      for (int k = 0; k < topics_k; ++k) {
        for (int w = 0; w < vocab; ++w) {
          ASSERT_NEAR(state.lambda(k, w), expected.lambda[k][w],
                      1e-8 * std::max(1.0, std::abs(expected.lambda[k][w])))
              << "corpus " << corpus << " step " << step;
        }
      }
      lambda = expected.lambda;
    }
  }
}

TEST(Update, MultiDocumentBatchAveragesStatistics) {
  Rng rng(39);
  auto config = toy_config(3);
  config.max_e_iters = 1000;
  const auto state = init_state(config, 5, rng);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{0, 4}, {3, 1}}),
                                                CoalitionDocument({{1, 2}, {4, 6}})};
  const auto res = e_step(state, config, batch);
  Eigen::MatrixXd sstats = Eigen::MatrixXd::Zero(3, 5);
  for (const auto& r : res) {
    for (std::size_t i = 0; i < r.words.size(); ++i) {
      sstats.col(r.words[i]) += r.counts[i] * r.phi.row(static_cast<Eigen::Index>(i)).transpose();
    }
  }
  const double rho = step_size(config, 1);
  const Eigen::MatrixXd expected =
      (1.0 - rho) * state.lambda +
      rho * (config.eta + (config.d_estimate / 2.0 * sstats).array()).matrix();
  UpdateStats stats;
  const auto next = update(state, config, batch, nullptr, &stats);
  EXPECT_TRUE(next.lambda.isApprox(expected, 1e-12));
  EXPECT_EQ(next.batch_counter, 2);
  EXPECT_DOUBLE_EQ(stats.rho, rho);
  EXPECT_EQ(stats.unconverged_documents, 0);
}

TEST(Update, RepeatedWordRaisesItsProbability) {
  Rng rng(40);
  const auto config = toy_config(2);
  auto state = init_state(config, 3, rng);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{1, 10}})};
  const auto before = topics(state);
  const auto res = e_step(state, config, batch);
  Eigen::Index top = 0;
  res[0].phi.row(0).maxCoeff(&top);
  state = update(std::move(state), config, batch);
  EXPECT_GT(topics(state)(static_cast<int>(top), 1), before(static_cast<int>(top), 1));
}

TEST(Update, KeepsLambdaPositiveAndIsDeterministic) {
  auto run = [] {
    Rng rng(41);
    const auto config = toy_config(4);
    auto state = init_state(config, 10, rng);
    for (int t = 0; t < 200; ++t) {
      std::vector<CoalitionDocument> batch;
      const int docs = uniform_int(rng, 1, 4);
      for (int d = 0; d < docs; ++d) {
        batch.push_back(CoalitionDocument({{uniform_int(rng, 0, 4), uniform_int(rng, 1, 50)},
                                           {uniform_int(rng, 5, 9), uniform_int(rng, 1, 50)}}));
      }
      state = update(std::move(state), config, batch);
      EXPECT_TRUE((state.lambda.array() > 0.0).all());
    }
    return state;
  };
  const auto a = run();
  const auto b = run();
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.batch_counter, 201);
}

TEST(Update, RejectsEmptyBatchAndForeignWords) {
  Rng rng(42);
  const auto config = toy_config(2);
  const auto state = init_state(config, 3, rng);
  EXPECT_THROW(update(state, config, {}), InvalidArgument);
  const std::vector<CoalitionDocument> batch = {CoalitionDocument({{3, 1}})};
  EXPECT_THROW(update(state, config, batch), InvalidArgument);
}

}  // namespace
}  // namespace ocf
