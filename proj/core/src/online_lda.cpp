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

#include "ocf/online_lda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ocf/digamma.hpp"

namespace ocf {

LdaConfig LdaConfig::for_topics(int topics) {
  LdaConfig config;
  config.topics = topics;
  config.alpha = 1.0 / topics;
  config.eta = 1.0 / topics;
  return config;
}

void LdaConfig::validate() const {
  if (topics < 1) throw InvalidArgument("LDA needs at least one topic");
  if (!(alpha > 0.0) || !(eta > 0.0)) throw InvalidArgument("alpha and eta must be > 0");
  if (!(tau0 >= 0.0)) throw InvalidArgument("tau0 must be >= 0");
  if (!(kappa > 0.0 && kappa <= 1.0)) throw InvalidArgument("kappa must lie in (0, 1]");
  if (d_estimate < 1) throw InvalidArgument("d_estimate must be >= 1");
  if (!(gamma_tol > 0.0)) throw InvalidArgument("gamma_tol must be > 0");
  if (max_e_iters < 1) throw InvalidArgument("max_e_iters must be >= 1");
}

LdaState init_state(const LdaConfig& config, int vocab_size, Rng& rng) {
  config.validate();
  if (vocab_size < 2) throw InvalidArgument("vocabulary needs at least two words");
  std::gamma_distribution<double> draw(100.0, 0.01);
  LdaState state;
  state.lambda.resize(config.topics, vocab_size);
  for (int k = 0; k < config.topics; ++k) {
    for (int w = 0; w < vocab_size; ++w) state.lambda(k, w) = draw(rng);
  }
  state.batch_counter = 1;
  return state;
}

Eigen::MatrixXd expected_log_beta(const LdaState& state) {
  Eigen::MatrixXd out(state.lambda.rows(), state.lambda.cols());
  for (Eigen::Index k = 0; k < state.lambda.rows(); ++k) {
    const double row_term = digamma(state.lambda.row(k).sum());
    for (Eigen::Index w = 0; w < state.lambda.cols(); ++w) {
      out(k, w) = digamma(state.lambda(k, w)) - row_term;
    }
  }
  return out;
}

namespace {

// Fills `out` with exp(E_q[log theta_k]) up to a common factor.
void exp_expected_log_theta(const Eigen::VectorXd& gamma, Eigen::VectorXd& out) {
  const double total = digamma(gamma.sum());
  double top = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < gamma.size(); ++k) {
    out(k) = digamma(gamma(k)) - total;
    top = std::max(top, out(k));
  }
  for (Eigen::Index k = 0; k < gamma.size(); ++k) out(k) = std::exp(out(k) - top);
}

EStepResult infer_document(const CoalitionDocument& doc, const Eigen::MatrixXd& exp_elog_beta,
                           const LdaConfig& config, Rng* rng) {
  const int topics = static_cast<int>(exp_elog_beta.rows());
  const auto counts = doc.counts();
  const auto m = static_cast<Eigen::Index>(counts.size());

  EStepResult res;
  res.words.reserve(counts.size());
  res.counts.reserve(counts.size());
  for (const auto& wc : counts) {
    if (wc.word < 0 || wc.word >= exp_elog_beta.cols()) {
      throw InvalidArgument("document word outside the model vocabulary");
    }
    res.words.push_back(wc.word);
    res.counts.push_back(wc.count);
  }

  res.gamma.resize(topics);
  if (config.gamma_init == GammaInit::kRandom) {
    if (rng == nullptr) throw InvalidArgument("random gamma init needs an engine");
    std::gamma_distribution<double> draw(100.0, 0.01);
    for (int k = 0; k < topics; ++k) res.gamma(k) = draw(*rng);
  } else {
    res.gamma.setOnes();
  }

  res.phi.resize(m, topics);
  Eigen::VectorXd theta(topics);
  Eigen::VectorXd next(topics);
  for (int it = 1; it <= config.max_e_iters; ++it) {
    exp_expected_log_theta(res.gamma, theta);
    next.setConstant(config.alpha);
    for (Eigen::Index r = 0; r < m; ++r) {
      const int w = res.words[static_cast<std::size_t>(r)];
      double norm = 0.0;
      for (int k = 0; k < topics; ++k) {
        const double v = theta(k) * exp_elog_beta(k, w);
        res.phi(r, k) = v;
        norm += v;
      }
      const double n_w = res.counts[static_cast<std::size_t>(r)];
      for (int k = 0; k < topics; ++k) {
        res.phi(r, k) /= norm;
        next(k) += n_w * res.phi(r, k);
      }
    }
    const double change = (next - res.gamma).cwiseAbs().sum() / topics;
    res.gamma.swap(next);
    res.iterations = it;
    if (change < config.gamma_tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace

std::vector<EStepResult> e_step(const LdaState& state, const LdaConfig& config,
                                std::span<const CoalitionDocument> batch, Rng* rng) {
  config.validate();
  if (state.topics() != config.topics) {
    throw InvalidArgument("LDA state topic count differs from config");
  }
  const Eigen::MatrixXd exp_elog_beta = expected_log_beta(state).array().exp().matrix();
  std::vector<EStepResult> out;
  out.reserve(batch.size());
  for (const auto& doc : batch) out.push_back(infer_document(doc, exp_elog_beta, config, rng));
  return out;
}

double step_size(const LdaConfig& config, std::int64_t t) {
  return std::pow(config.tau0 + static_cast<double>(t), -config.kappa);
}

LdaState update(LdaState state, const LdaConfig& config,
                std::span<const CoalitionDocument> batch, Rng* rng, UpdateStats* stats) {
  if (batch.empty()) throw InvalidArgument("LDA update needs a non-empty batch");
  const auto results = e_step(state, config, batch, rng);

  Eigen::MatrixXd sstats = Eigen::MatrixXd::Zero(state.lambda.rows(), state.lambda.cols());
  int max_iters = 0;
  int unconverged = 0;
  for (const auto& res : results) {
    for (std::size_t r = 0; r < res.words.size(); ++r) {
      sstats.col(res.words[r]) +=
          res.counts[r] * res.phi.row(static_cast<Eigen::Index>(r)).transpose();
    }
    max_iters = std::max(max_iters, res.iterations);
    unconverged += res.converged ? 0 : 1;
  }

  const double rho = step_size(config, state.batch_counter);
  const double scale =
      static_cast<double>(config.d_estimate) / static_cast<double>(batch.size());
  state.lambda = (1.0 - rho) * state.lambda +
                 rho * (config.eta + (scale * sstats).array()).matrix();
  ++state.batch_counter;

  if (stats != nullptr) *stats = {rho, max_iters, unconverged};
  return state;
}

TopicMatrix topics(const LdaState& state) {
  TopicMatrix out;
  out.beta = state.lambda;
  for (Eigen::Index k = 0; k < out.beta.rows(); ++k) out.beta.row(k) /= out.beta.row(k).sum();
  return out;
}

}  // namespace ocf
