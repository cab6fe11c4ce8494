// Copyright 2026 The Privest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Multivariate covariance estimation under zCDP by iterative squeezing of a
// sandwich L <= A Sigma A <= I.  Each step rescales the data by A, clips to
// a norm ball, noises the empirical second-moment matrix, and tightens both
// sides of the sandwich; with t = 1 this is the naive clip-and-noise
// ("analyze Gauss" style) estimator.

#ifndef PRIVEST_COVARIANCE_HPP_
#define PRIVEST_COVARIANCE_HPP_

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "privest/privacy.hpp"
#include "privest/rng.hpp"

namespace privest {

// State carried between squeeze steps: scaling matrix A, lower-bound matrix
// L (L <= A Sigma A <= I), and the latest noised clipped covariance Z.
struct CovarianceState {
  Eigen::MatrixXd A;
  Eigen::MatrixXd L;
  Eigen::MatrixXd Z;
};

struct CovConfig {
  int t = 1;
  PrivacyBudget budget;        // one entry per iteration
  double beta = 0.1;           // total failure probability
  double shrink = 1.0;         // in (0, 1]; tightens the confidence ellipsoids
  bool psd_project = false;    // clamp negative eigenvalues of the final estimate
  // In (0, 1]; scales the clipping radius gamma.  1.0 is the analysis-grade
  // threshold (no point clipped w.h.p.); smaller values cut the sensitivity
  // and give better practical accuracy in wide-prior regimes.
  double clip_multiplier = 1.0;
  // When the noised second-moment matrix has negative eigenvalues (a
  // high-noise regime), floor them at zero before inverting instead of
  // failing.  Post-processing, so privacy is unaffected.  Off by default:
  // the strict mode surfaces hopeless configurations as errors.
  bool floor_spectrum = false;
};

struct CovResult {
  Eigen::MatrixXd estimate;
  std::vector<CovarianceState> states;  // [input, step 1, ..., step t]
  double rho_spent = 0.0;
};

// l2-sensitivity of the empirical second-moment matrix of n points with
// squared norm at most T: sqrt(2) T / n.
Sensitivity CovSensitivity(double T, int n);

// One squeeze step.  Samples must be zero-mean; d >= 2.  The clipping radius
// is clip_multiplier * gamma and the noise is calibrated to the radius
// actually applied.  With floor_spectrum false, throws std::domain_error if
// Z + eta I fails to be positive definite, which signals that the data/privacy
// regime is too noisy for the configured shrink factor; with it true, the
// negative part of Z's spectrum is clamped to zero first.
CovarianceState MvcStep(const Eigen::MatrixXd& samples, const CovarianceState& state,
                        double rho_s, double beta_s, double shrink, Rng& rng,
                        double clip_multiplier = 1.0, bool floor_spectrum = false);

// Iterated estimator.  Caller guarantees L0 <= Sigma <= u I.  Runs t squeeze
// steps (beta/(4(t-1)) each, beta/4 final) and returns
// A_{t-1}^{-1} Z_t A_{t-1}^{-1}, symmetrized.
CovResult MvcRec(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& L0, double u,
                 const CovConfig& config, Rng& rng);

// Rescales data by A_prior^{-1/2} so that a prior A_prior <= Sigma <= K A_prior
// becomes I <= Sigma' <= K I.  Returns the transformed samples and u = K; the
// caller un-rescales the final estimate by A_prior^{1/2} (.) A_prior^{1/2}.
std::pair<Eigen::MatrixXd, double> ReduceGeneralCovariance(const Eigen::MatrixXd& samples,
                                                           const Eigen::MatrixXd& A_prior,
                                                           double K);

// Row-pair differencing for matrix data: maps 2m rows to m rows
// (X_{2i} - X_{2i+1}) / sqrt(2), removing an unknown mean.
Eigen::MatrixXd DifferencePairRows(const Eigen::MatrixXd& samples);

}  // namespace privest

#endif  // PRIVEST_COVARIANCE_HPP_
