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

#ifndef OCF_ONLINE_LDA_HPP
#define OCF_ONLINE_LDA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ocf/documents.hpp"
#include "ocf/types.hpp"

namespace ocf {

enum class GammaInit {
  kOnes,    ///< every gamma entry starts at 1.0
  kRandom,  ///< Gamma(100, 0.01) draws from the caller's engine
};

struct LdaConfig {
  int topics = 15;
  double alpha = 1.0 / 15;
  double eta = 1.0 / 15;
  double tau0 = 200.0;
  double kappa = 0.9;
  /// Estimated corpus size D.
  std::int64_t d_estimate = 100'000;
  /// E-step stops when the mean absolute change of gamma drops below this.
  double gamma_tol = 1e-3;
  int max_e_iters = 100;
  GammaInit gamma_init = GammaInit::kOnes;

  /// Defaults with alpha = eta = 1/K.
  static LdaConfig for_topics(int topics);
  void validate() const;
};

/// Variational topic parameters lambda (K x V) and the batch counter t.
struct LdaState {
  Eigen::MatrixXd lambda;
  std::int64_t batch_counter = 1;

  int topics() const { return static_cast<int>(lambda.rows()); }
  int vocab_size() const { return static_cast<int>(lambda.cols()); }
};

/// beta_{kw} = lambda_{kw} / sum_w lambda_{kw}.
struct TopicMatrix {
  Eigen::MatrixXd beta;

  int topics() const { return static_cast<int>(beta.rows()); }
  int vocab_size() const { return static_cast<int>(beta.cols()); }
  double operator()(int topic, int word) const { return beta(topic, word); }
};

struct EStepResult {
  /// Variational Dirichlet parameters of the document's topic proportions.
  Eigen::VectorXd gamma;
  /// Distinct words of the document, with phi row r belonging to words[r].
  std::vector<int> words;
  std::vector<int> counts;
  /// words.size() x K responsibilities; each row sums to 1.
  Eigen::MatrixXd phi;
  int iterations = 0;
  bool converged = false;
};

/// lambda drawn i.i.d. from Gamma(shape 100, scale 0.01).
LdaState init_state(const LdaConfig& config, int vocab_size, Rng& rng);

/// E_q[log beta_{kw}] = psi(lambda_kw) - psi(sum_w lambda_kw).
Eigen::MatrixXd expected_log_beta(const LdaState& state);

/// Alternates the phi and gamma updates per document until the mean absolute
/// change of gamma falls below gamma_tol or max_e_iters is reached. The
/// returned phi is the one that produced the returned gamma. `rng` is only
/// consulted when config.gamma_init == kRandom.
std::vector<EStepResult> e_step(const LdaState& state, const LdaConfig& config,
                                std::span<const CoalitionDocument> batch, Rng* rng = nullptr);

/// rho_t = (tau0 + t)^-kappa.
double step_size(const LdaConfig& config, std::int64_t t);

struct UpdateStats {
  double rho = 0.0;
  int max_iterations = 0;
  int unconverged_documents = 0;
};

/// One streaming step: E-step on the batch, then
///   lambda~ = eta + (D / S) sum_d n_dw phi_dwk
///   lambda  = (1 - rho_t) lambda + rho_t lambda~
/// and batch_counter += 1.
LdaState update(LdaState state, const LdaConfig& config,
                std::span<const CoalitionDocument> batch, Rng* rng = nullptr,
                UpdateStats* stats = nullptr);

TopicMatrix topics(const LdaState& state);

}  // namespace ocf

#endif  // OCF_ONLINE_LDA_HPP
