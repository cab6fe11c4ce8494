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

#ifndef PRIVEST_PRIVACY_HPP_
#define PRIVEST_PRIVACY_HPP_

#include <vector>

#include <Eigen/Dense>

#include "privest/rng.hpp"

namespace privest {

// A rho-zCDP budget with a per-iteration split.  Invariant: every entry of
// per_step is positive and the entries sum to rho_total.
struct PrivacyBudget {
  double rho_total = 0.0;
  std::vector<double> per_step;

  int steps() const { return static_cast<int>(per_step.size()); }
};

// l2-sensitivity of a statistic, in data units.
struct Sensitivity {
  double l2 = 0.0;
};

// Standard deviation of calibrated Gaussian noise.
struct NoiseScale {
  double sigma = 0.0;

  // sigma = delta / sqrt(2 rho), the Gaussian-mechanism calibration for
  // rho-zCDP.
  static NoiseScale ForZcdp(Sensitivity delta, double rho);
};

// Splits a total budget across t iterations: 3 rho/4 to the final iteration
// and rho/(4(t-1)) to each earlier one.  t == 1 gets the whole budget.
PrivacyBudget SplitBudget(double rho_total, int t);

// Evenly splits a total budget across t iterations.
PrivacyBudget UniformBudget(double rho_total, int t);

// value + N(0, (delta/sqrt(2 rho))^2 I).  Satisfies rho-zCDP for a statistic
// with l2-sensitivity delta.
Eigen::VectorXd GaussianMechanism(const Eigen::VectorXd& value, Sensitivity delta,
                                  double rho, Rng& rng);

// A d x d symmetric matrix with i.i.d. N(0, sigma^2) entries on and above the
// diagonal, mirrored below.
Eigen::MatrixXd SymmetricGaussianNoise(int d, NoiseScale sigma, Rng& rng);

// Reporting utility: rho-zCDP implies (rho + 2 sqrt(rho ln(1/delta)), delta)-DP.
double ZcdpToApproxDp(double rho, double delta);

// (epsilon, 0)-DP implies (epsilon^2 / 2)-zCDP.
double PureDpToZcdp(double epsilon);

}  // namespace privest

#endif  // PRIVEST_PRIVACY_HPP_
