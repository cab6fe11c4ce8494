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

#ifndef PRIVEST_PCA_HPP_
#define PRIVEST_PCA_HPP_

#include <vector>

#include <Eigen/Dense>

#include "privest/rng.hpp"

namespace privest {

struct PcaConfig {
  double scale_factor = 1.0;  // data is multiplied by this before estimation
  double kappa = 1.0;         // prior I <= Sigma <= kappa I, after scaling
  double rho = 0.5;
  int t = 1;
  int k = 2;                  // number of principal components
  double beta = 0.1;
  double shrink = 1.0;
  double clip_multiplier = 1.0;  // forwarded to the covariance estimator
  bool floor_spectrum = false;   // forwarded to the covariance estimator
  bool noiseless = false;     // debug mode: effectively infinite rho
};

struct PcaResult {
  Eigen::MatrixXd components;    // d x k, columns are top eigenvectors
  Eigen::VectorXd eigenvalues;   // length k, descending
  Eigen::MatrixXd projected;     // n x k
  // |<private component, non-private component>| per component; filled when
  // compare_nonprivate is requested.
  std::vector<double> alignments;
};

// Private principal components: scales the data, runs the iterative private
// covariance estimator, eigendecomposes the estimate, and projects the data
// onto the top-k eigenvectors.  Assumes (approximately) zero-mean data.
PcaResult PrivatePca(const Eigen::MatrixXd& data, const PcaConfig& config, Rng& rng,
                     bool compare_nonprivate = false);

}  // namespace privest

#endif  // PRIVEST_PCA_HPP_
