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
// Multivariate mean estimation under zCDP by iterative shrinking of a
// confidence ball.  Each step projects the data into a slightly enlarged
// ball, releases the noised clipped mean, and derives a smaller ball around
// it; with t = 1 this is exactly the naive clip-and-noise estimator.

#ifndef PRIVEST_MEAN_HPP_
#define PRIVEST_MEAN_HPP_

#include <vector>

#include <Eigen/Dense>

#include "privest/privacy.hpp"
#include "privest/rng.hpp"

namespace privest {

struct ConfidenceBall {
  Eigen::VectorXd center;
  double radius = 0.0;
};

struct MeanConfig {
  int t = 1;
  PrivacyBudget budget;         // one entry per iteration
  double beta = 0.1;            // total failure probability
  double clip_multiplier = 1.0; // in (0, 1]; shrinks the clipping margin
};

struct MeanResult {
  Eigen::VectorXd estimate;
  std::vector<ConfidenceBall> balls;  // [input, step 1, ..., step t]
  double rho_spent = 0.0;
};

// One private shrink of a mean confidence ball.  Rows of samples are the
// data points.  The clipping margin gamma1 is scaled by clip_multiplier; the
// sensitivity calibration always uses the clip radius actually applied.
ConfidenceBall MvmStep(const Eigen::MatrixXd& samples, const ConfidenceBall& ball,
                       double rho_s, double beta_s, double clip_multiplier, Rng& rng);

// Iterated estimator: t-1 shrink steps at failure budget beta/(4(t-1)) each,
// then a final step at beta/4.  Returns the final center.
MeanResult MvmRec(const Eigen::MatrixXd& samples, const ConfidenceBall& ball,
                  const MeanConfig& config, Rng& rng);

// The radius sequence [r0, r1, ..., rt] produced by the step formula is
// data-independent; this evaluates it without touching any data, e.g. to
// pre-select t.
std::vector<double> RadiusRecurrence(double r0, int d, int n, const PrivacyBudget& budget,
                                     double beta, double clip_multiplier = 1.0);

// samples * cov_proxy^{-1/2}, mapping data with known covariance cov_proxy
// to approximately identity covariance.
Eigen::MatrixXd Whiten(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& cov_proxy);

}  // namespace privest

#endif  // PRIVEST_MEAN_HPP_
