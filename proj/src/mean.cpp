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

#include "privest/mean.hpp"

#include <cmath>
#include <stdexcept>

#include "privest/bounds.hpp"
#include "privest/linalg.hpp"

namespace privest {

namespace {

void CheckStepParams(const Eigen::MatrixXd& samples, const ConfidenceBall& ball,
                     double rho_s, double beta_s, double clip_multiplier) {
  if (samples.rows() < 1) throw std::invalid_argument("MvmStep: empty sample");
  if (samples.cols() != ball.center.size()) {
    throw std::invalid_argument("MvmStep: dimension mismatch between data and ball center");
  }
  if (!(ball.radius >= 0.0)) throw std::invalid_argument("MvmStep: negative radius");
  if (!(rho_s > 0.0)) throw std::invalid_argument("MvmStep: rho must be positive");
  if (!(beta_s > 0.0 && beta_s < 1.0)) throw std::invalid_argument("MvmStep: beta must be in (0, 1)");
  if (!(clip_multiplier > 0.0 && clip_multiplier <= 1.0)) {
    throw std::invalid_argument("MvmStep: clip_multiplier must be in (0, 1]");
  }
}

// New radius from the step formula; shared by MvmStep and RadiusRecurrence so
// the data-free preview matches the estimator exactly.
double NextRadius(double r, int d, int n, double rho_s, double beta_s, double clip_multiplier) {
  const double gamma1 = GammaNormBound(d, static_cast<double>(n), beta_s);
  const double gamma2 = GammaNormBound(d, 1.0, beta_s);
  const double clip_radius = r + clip_multiplier * gamma1;
  return gamma2 * std::sqrt(1.0 / n + 2.0 * clip_radius * clip_radius /
                                          (static_cast<double>(n) * n * rho_s));
}

double StepBeta(double beta, int t, int i) {
  if (i == t - 1) return beta / 4.0;
  return beta / (4.0 * (t - 1));
}

}  // namespace

ConfidenceBall MvmStep(const Eigen::MatrixXd& samples, const ConfidenceBall& ball,
                       double rho_s, double beta_s, double clip_multiplier, Rng& rng) {
  CheckStepParams(samples, ball, rho_s, beta_s, clip_multiplier);
  const int n = static_cast<int>(samples.rows());
  const int d = static_cast<int>(samples.cols());

  const double gamma1 = GammaNormBound(d, static_cast<double>(n), beta_s);
  const double clip_radius = ball.radius + clip_multiplier * gamma1;

  // Radial projection into B(center, clip_radius), then empirical mean.
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd diff = samples.row(i).transpose() - ball.center;
    const double norm = diff.norm();
    if (norm > clip_radius) diff *= clip_radius / norm;
    sum += ball.center + diff;
  }
  const Eigen::VectorXd clipped_mean = sum / n;

  const Sensitivity delta{2.0 * clip_radius / n};
  const Eigen::VectorXd z = GaussianMechanism(clipped_mean, delta, rho_s, rng);

  return {z, NextRadius(ball.radius, d, n, rho_s, beta_s, clip_multiplier)};
}

MeanResult MvmRec(const Eigen::MatrixXd& samples, const ConfidenceBall& ball,
                  const MeanConfig& config, Rng& rng) {
  if (config.t < 1) throw std::invalid_argument("MvmRec: t must be at least 1");
  if (config.budget.steps() != config.t) {
    throw std::invalid_argument("MvmRec: budget length must equal t");
  }
  MeanResult result;
  result.balls.push_back(ball);
  ConfidenceBall current = ball;
  for (int i = 0; i < config.t; ++i) {
    current = MvmStep(samples, current, config.budget.per_step[i],
                      StepBeta(config.beta, config.t, i), config.clip_multiplier, rng);
    result.rho_spent += config.budget.per_step[i];
    result.balls.push_back(current);
  }
  result.estimate = current.center;
  return result;
}

std::vector<double> RadiusRecurrence(double r0, int d, int n, const PrivacyBudget& budget,
                                     double beta, double clip_multiplier) {
  if (!(r0 > 0.0)) throw std::invalid_argument("RadiusRecurrence: r0 must be positive");
  if (budget.steps() < 1) throw std::invalid_argument("RadiusRecurrence: empty budget");
  const int t = budget.steps();
  std::vector<double> radii{r0};
  double r = r0;
  for (int i = 0; i < t; ++i) {
    r = NextRadius(r, d, n, budget.per_step[i], StepBeta(beta, t, i), clip_multiplier);
    radii.push_back(r);
  }
  return radii;
}

Eigen::MatrixXd Whiten(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& cov_proxy) {
  if (cov_proxy.rows() != samples.cols() || cov_proxy.cols() != samples.cols()) {
    throw std::invalid_argument("Whiten: proxy dimension mismatch");
  }
  return samples * SymInvSqrt(cov_proxy);
}

}  // namespace privest
