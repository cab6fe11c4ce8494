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

#ifndef PRIVEST_DATAGEN_HPP_
#define PRIVEST_DATAGEN_HPP_

#include <optional>

#include <Eigen/Dense>

#include "privest/rng.hpp"

namespace privest {

enum class DistKind { kGaussian, kLaplace, kStudentT3 };

// Laplace and Student-t3 draws are coordinatewise i.i.d. and rescaled to
// unit per-coordinate variance, so non-private baselines are comparable
// across distributions.
struct DistributionSpec {
  DistKind kind = DistKind::kGaussian;
  int d = 1;
  Eigen::VectorXd mean;                    // empty means zero
  std::optional<Eigen::MatrixXd> covariance;  // absent means identity
};

// n i.i.d. rows from the spec; deterministic given the rng state.
Eigen::MatrixXd Sample(const DistributionSpec& spec, int n, Rng& rng);

// Q diag(kappa, ..., kappa, 1, ..., 1) Q^T with Haar-random Q; d/2
// eigenvalues at each of kappa and 1.  d must be even.
Eigen::MatrixXd SkewedCovariance(int d, double kappa, Rng& rng);

// Haar-distributed orthogonal matrix (Gaussian QR with the diagonal-sign
// correction).
Eigen::MatrixXd RandomRotation(int d, Rng& rng);

}  // namespace privest

#endif  // PRIVEST_DATAGEN_HPP_
