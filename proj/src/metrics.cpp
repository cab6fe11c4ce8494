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

#include "privest/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "privest/linalg.hpp"

namespace privest {

double L2Error(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
  if (estimate.size() != truth.size()) throw std::invalid_argument("L2Error: length mismatch");
  return (estimate - truth).norm();
}

double MahalanobisCovError(const Eigen::MatrixXd& estimate, const Eigen::MatrixXd& truth) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols()) {
    throw std::invalid_argument("MahalanobisCovError: dimension mismatch");
  }
  const Eigen::MatrixXd w = SymInvSqrt(truth);
  const Eigen::MatrixXd normalized = w * estimate * w;
  return (normalized - Eigen::MatrixXd::Identity(truth.rows(), truth.cols())).norm();
}

double MahalanobisMeanError(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth_mean,
                            const Eigen::MatrixXd& truth_cov) {
  if (estimate.size() != truth_mean.size()) {
    throw std::invalid_argument("MahalanobisMeanError: length mismatch");
  }
  return (SymInvSqrt(truth_cov) * (estimate - truth_mean)).norm();
}

double TrimmedMean(std::span<const double> values, double trim) {
  if (values.empty()) throw std::invalid_argument("TrimmedMean: empty input");
  if (!(trim >= 0.0 && trim < 0.5)) throw std::invalid_argument("TrimmedMean: trim must be in [0, 0.5)");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  const std::size_t drop = static_cast<std::size_t>(std::floor(trim * k));
  const std::size_t keep = k - 2 * drop;
  const double sum = std::accumulate(sorted.begin() + drop, sorted.begin() + drop + keep, 0.0);
  return sum / keep;
}

double EigvecAlignment(const Eigen::VectorXd& v_hat, const Eigen::VectorXd& v_true) {
  if (v_hat.size() != v_true.size()) throw std::invalid_argument("EigvecAlignment: length mismatch");
  const double nh = v_hat.norm();
  const double nt = v_true.norm();
  if (nh == 0.0 || nt == 0.0) throw std::invalid_argument("EigvecAlignment: zero vector");
  return std::abs(v_hat.dot(v_true)) / (nh * nt);
}

TrialReport TrialReport::Make(std::string method, std::string config_id,
                              std::vector<double> errors, double trim) {
  TrialReport report;
  report.method = std::move(method);
  report.config_id = std::move(config_id);
  report.trim = trim;
  report.aggregate = TrimmedMean(errors, trim);
  report.per_trial_errors = std::move(errors);
  return report;
}

}  // namespace privest
