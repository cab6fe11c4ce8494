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

#include "privest/pca.hpp"

#include <stdexcept>

#include "privest/covariance.hpp"
#include "privest/linalg.hpp"
#include "privest/metrics.hpp"

namespace privest {

namespace {

// Top-k eigenpairs of a symmetric matrix, eigenvalues descending.
void TopK(const Eigen::MatrixXd& m, int k, Eigen::MatrixXd* vectors, Eigen::VectorXd* values) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("PrivatePca: eigendecomposition failed");
  const int d = static_cast<int>(m.rows());
  vectors->resize(d, k);
  values->resize(k);
  // SelfAdjointEigenSolver sorts ascending.
  for (int j = 0; j < k; ++j) {
    vectors->col(j) = es.eigenvectors().col(d - 1 - j);
    (*values)[j] = es.eigenvalues()[d - 1 - j];
  }
}

}  // namespace

PcaResult PrivatePca(const Eigen::MatrixXd& data, const PcaConfig& config, Rng& rng,
                     bool compare_nonprivate) {
  const int d = static_cast<int>(data.cols());
  if (config.k < 1 || config.k > d) throw std::invalid_argument("PrivatePca: k must be in [1, d]");
  if (!(config.scale_factor > 0.0)) {
    throw std::invalid_argument("PrivatePca: scale_factor must be positive");
  }

  const Eigen::MatrixXd scaled = data * config.scale_factor;

  CovConfig cov_config;
  cov_config.t = config.t;
  const double rho = config.noiseless ? 1e18 : config.rho;
  cov_config.budget = SplitBudget(rho, config.t);
  cov_config.beta = config.beta;
  cov_config.shrink = config.shrink;
  cov_config.clip_multiplier = config.clip_multiplier;
  cov_config.floor_spectrum = config.floor_spectrum;

  const Eigen::MatrixXd sigma_hat =
      MvcRec(scaled, Eigen::MatrixXd::Identity(d, d), config.kappa, cov_config, rng).estimate;

  PcaResult result;
  TopK(sigma_hat, config.k, &result.components, &result.eigenvalues);
  result.projected = scaled * result.components;

  if (compare_nonprivate) {
    const Eigen::MatrixXd empirical =
        Symmetrize(scaled.transpose() * scaled / static_cast<double>(scaled.rows()));
    Eigen::MatrixXd ref_vectors;
    Eigen::VectorXd ref_values;
    TopK(empirical, config.k, &ref_vectors, &ref_values);
    result.alignments.reserve(config.k);
    for (int j = 0; j < config.k; ++j) {
      result.alignments.push_back(EigvecAlignment(result.components.col(j), ref_vectors.col(j)));
    }
  }
  return result;
}

}  // namespace privest
