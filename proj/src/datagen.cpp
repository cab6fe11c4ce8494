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

#include "privest/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "privest/linalg.hpp"

namespace privest {

namespace {

// Unit-variance Laplace via inverse CDF (scale 1/sqrt(2)).
double LaplaceUnit(Rng& rng) {
  const double u = rng.Uniform() - 0.5;
  const double scale = 1.0 / std::sqrt(2.0);
  return -scale * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
}

// Student's t with 3 degrees of freedom, rescaled by 1/sqrt(3) to unit
// variance.
double StudentT3Unit(Rng& rng) {
  const double z = rng.Gaussian();
  double chi2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double g = rng.Gaussian();
    chi2 += g * g;
  }
  const double t = z / std::sqrt(chi2 / 3.0);
  return t / std::sqrt(3.0);
}

}  // namespace

Eigen::MatrixXd Sample(const DistributionSpec& spec, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("Sample: n must be at least 1");
  if (spec.d < 1) throw std::invalid_argument("Sample: d must be at least 1");
  Eigen::MatrixXd x(n, spec.d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < spec.d; ++j) {
      switch (spec.kind) {
        case DistKind::kGaussian:
          x(i, j) = rng.Gaussian();
          break;
        case DistKind::kLaplace:
          x(i, j) = LaplaceUnit(rng);
          break;
        case DistKind::kStudentT3:
          x(i, j) = StudentT3Unit(rng);
          break;
      }
    }
  }
  if (spec.covariance) {
    if (spec.covariance->rows() != spec.d || spec.covariance->cols() != spec.d) {
      throw std::invalid_argument("Sample: covariance dimension mismatch");
    }
    x = x * SymSqrt(*spec.covariance);
  }
  if (spec.mean.size() > 0) {
    if (spec.mean.size() != spec.d) throw std::invalid_argument("Sample: mean dimension mismatch");
    x.rowwise() += spec.mean.transpose();
  }
  return x;
}

Eigen::MatrixXd SkewedCovariance(int d, double kappa, Rng& rng) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("SkewedCovariance: d must be even and >= 2");
  if (!(kappa >= 1.0)) throw std::invalid_argument("SkewedCovariance: kappa must be at least 1");
  Eigen::VectorXd eigs(d);
  eigs.head(d / 2).setConstant(kappa);
  eigs.tail(d / 2).setOnes();
  const Eigen::MatrixXd q = RandomRotation(d, rng);
  return Symmetrize(q * eigs.asDiagonal() * q.transpose());
}

Eigen::MatrixXd RandomRotation(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("RandomRotation: d must be at least 1");
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.Gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Sign correction makes the distribution Haar.
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

}  // namespace privest
