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

#include "privest/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace privest {

namespace {

constexpr double kEigFloorRel = 1e-12;

// Applies f to the eigenvalues of a symmetric matrix.  require_pd guards
// functions that are undefined at (numerically) zero eigenvalues.
template <typename F>
Eigen::MatrixXd SymApply(const Eigen::MatrixXd& m, F f, bool require_pd) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymApply: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Symmetrize(m));
  if (es.info() != Eigen::Success) throw std::runtime_error("SymApply: eigendecomposition failed");
  const Eigen::VectorXd& evals = es.eigenvalues();
  if (require_pd) {
    const double floor = kEigFloorRel * std::max(evals.cwiseAbs().maxCoeff(), 1e-300);
    if (evals.minCoeff() <= floor) {
      throw std::domain_error("SymApply: matrix is not (numerically) positive definite");
    }
  }
  Eigen::VectorXd mapped(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) mapped[i] = f(evals[i]);
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

Eigen::MatrixXd Symmetrize(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd SymSqrt(const Eigen::MatrixXd& m) {
  return SymApply(m, [](double x) { return std::sqrt(x); }, /*require_pd=*/true);
}

Eigen::MatrixXd SymInvSqrt(const Eigen::MatrixXd& m) {
  return SymApply(m, [](double x) { return 1.0 / std::sqrt(x); }, /*require_pd=*/true);
}

Eigen::MatrixXd SymInverse(const Eigen::MatrixXd& m) {
  return SymApply(m, [](double x) { return 1.0 / x; }, /*require_pd=*/true);
}

Eigen::MatrixXd PsdProject(const Eigen::MatrixXd& m) {
  return SymApply(m, [](double x) { return x < 0.0 ? 0.0 : x; }, /*require_pd=*/false);
}

double MinEigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Symmetrize(m));
  if (es.info() != Eigen::Success) throw std::runtime_error("MinEigenvalue: eigendecomposition failed");
  return es.eigenvalues().minCoeff();
}

bool PsdDominates(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  return MinEigenvalue(a - b) >= -tol;
}

}  // namespace privest
