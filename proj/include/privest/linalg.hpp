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

#ifndef PRIVEST_LINALG_HPP_
#define PRIVEST_LINALG_HPP_

#include <Eigen/Dense>

namespace privest {

// Symmetric matrix functions via eigendecomposition.  All of them treat an
// eigenvalue below 1e-12 * max_eigenvalue as a singularity and throw
// std::domain_error instead of silently regularizing.

Eigen::MatrixXd SymSqrt(const Eigen::MatrixXd& m);
Eigen::MatrixXd SymInvSqrt(const Eigen::MatrixXd& m);
Eigen::MatrixXd SymInverse(const Eigen::MatrixXd& m);

// (m + m^T) / 2.
Eigen::MatrixXd Symmetrize(const Eigen::MatrixXd& m);

// Clamps negative eigenvalues of a symmetric matrix to zero.
Eigen::MatrixXd PsdProject(const Eigen::MatrixXd& m);

// Smallest eigenvalue of a symmetric matrix.
double MinEigenvalue(const Eigen::MatrixXd& m);

// Checks a - b is positive semi-definite up to tolerance tol on the
// smallest eigenvalue.
bool PsdDominates(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol = 1e-9);

}  // namespace privest

#endif  // PRIVEST_LINALG_HPP_
