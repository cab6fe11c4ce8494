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

#ifndef PRIVEST_METRICS_HPP_
#define PRIVEST_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace privest {

double L2Error(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth);

// || Sigma^{-1/2} estimate Sigma^{-1/2} - I ||_F; affine-invariant.
double MahalanobisCovError(const Eigen::MatrixXd& estimate, const Eigen::MatrixXd& truth);

// || Sigma^{-1/2} (estimate - truth_mean) ||_2.
double MahalanobisMeanError(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth_mean,
                            const Eigen::MatrixXd& truth_cov);

// Mean after dropping floor(trim * k) smallest and floor(trim * k) largest
// of k values (trim is the per-side fraction; trim = 0.1 with k = 100 drops
// exactly 10 per side).
double TrimmedMean(std::span<const double> values, double trim);

// |<v_hat, v_true>| after normalization; eigenvectors carry a sign
// ambiguity, so alignment is reported in [0, 1].
double EigvecAlignment(const Eigen::VectorXd& v_hat, const Eigen::VectorXd& v_true);

struct TrialReport {
  std::string method;
  std::string config_id;
  std::vector<double> per_trial_errors;
  double trim = 0.1;
  double aggregate = 0.0;  // TrimmedMean(per_trial_errors, trim)

  static TrialReport Make(std::string method, std::string config_id,
                          std::vector<double> errors, double trim);
};

}  // namespace privest

#endif  // PRIVEST_METRICS_HPP_
