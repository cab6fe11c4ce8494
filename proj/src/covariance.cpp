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

#include "privest/covariance.hpp"

#include <cmath>
#include <stdexcept>

#include "privest/bounds.hpp"
#include "privest/linalg.hpp"

namespace privest {

namespace {

double StepBeta(double beta, int t, int i) {
  if (i == t - 1) return beta / 4.0;
  return beta / (4.0 * (t - 1));
}

}  // namespace

Sensitivity CovSensitivity(double T, int n) {
  if (!(T > 0.0)) throw std::invalid_argument("CovSensitivity: T must be positive");
  if (n < 1) throw std::invalid_argument("CovSensitivity: n must be at least 1");
  return Sensitivity{std::sqrt(2.0) * T / n};
}

CovarianceState MvcStep(const Eigen::MatrixXd& samples, const CovarianceState& state,
                        double rho_s, double beta_s, double shrink, Rng& rng,
                        double clip_multiplier, bool floor_spectrum) {
  const int n = static_cast<int>(samples.rows());
  const int d = static_cast<int>(samples.cols());
  if (n < 1) throw std::invalid_argument("MvcStep: empty sample");
  if (d < 2) throw std::invalid_argument("MvcStep: d must be at least 2");
  if (state.A.rows() != d || state.A.cols() != d) {
    throw std::invalid_argument("MvcStep: dimension mismatch between data and state");
  }
  if (!(rho_s > 0.0)) throw std::invalid_argument("MvcStep: rho must be positive");
  if (!(beta_s > 0.0 && beta_s < 1.0)) throw std::invalid_argument("MvcStep: beta must be in (0, 1)");
  if (!(shrink > 0.0 && shrink <= 1.0)) {
    throw std::invalid_argument("MvcStep: shrink must be in (0, 1]");
  }
  if (!(clip_multiplier > 0.0 && clip_multiplier <= 1.0)) {
    throw std::invalid_argument("MvcStep: clip_multiplier must be in (0, 1]");
  }

  const double gamma = clip_multiplier * GammaNormBound(d, static_cast<double>(n), beta_s);

  // Rescale, clip to B(0, gamma), accumulate the second-moment matrix.
  Eigen::MatrixXd second_moment = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd w = state.A * samples.row(i).transpose();
    const double norm = w.norm();
    if (norm > gamma) w *= gamma / norm;
    second_moment.noalias() += w * w.transpose();
  }
  second_moment /= n;

  const Sensitivity delta = CovSensitivity(gamma * gamma, n);
  const NoiseScale entry_scale = NoiseScale::ForZcdp(delta, rho_s);
  const Eigen::MatrixXd z = second_moment + SymmetricGaussianNoise(d, entry_scale, rng);

  const double eta = shrink * EtaEmpiricalCovBound(d, n, beta_s);
  const double nu = shrink * NuNoiseSpectralBound(d, n, rho_s, beta_s);

  const Eigen::MatrixXd u_tilde =
      (floor_spectrum ? PsdProject(z) : z) + eta * Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd u_inv_sqrt;
  try {
    u_inv_sqrt = SymInvSqrt(u_tilde);
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "MvcStep: Z + eta I is not positive definite; the privacy/data regime "
        "is too noisy for the configured shrink factor");
  }

  CovarianceState next;
  next.Z = z;
  next.L = Symmetrize(u_inv_sqrt *
                      (z - (eta + nu) * Eigen::MatrixXd::Identity(d, d)) * u_inv_sqrt);
  next.A = u_inv_sqrt * state.A;
  return next;
}

CovResult MvcRec(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& L0, double u,
                 const CovConfig& config, Rng& rng) {
  if (config.t < 1) throw std::invalid_argument("MvcRec: t must be at least 1");
  if (config.budget.steps() != config.t) {
    throw std::invalid_argument("MvcRec: budget length must equal t");
  }
  if (!(u > 0.0)) throw std::invalid_argument("MvcRec: u must be positive");
  const int d = static_cast<int>(samples.cols());
  if (L0.rows() != d || L0.cols() != d) {
    throw std::invalid_argument("MvcRec: L0 dimension mismatch");
  }

  CovResult result;
  CovarianceState state;
  state.A = Eigen::MatrixXd::Identity(d, d) / std::sqrt(u);
  state.L = L0 / std::sqrt(u);
  state.Z = Eigen::MatrixXd::Zero(d, d);
  result.states.push_back(state);

  // The final unscaling uses the A from before the last step.
  Eigen::MatrixXd a_prev = state.A;
  for (int i = 0; i < config.t; ++i) {
    a_prev = state.A;
    state = MvcStep(samples, state, config.budget.per_step[i],
                    StepBeta(config.beta, config.t, i), config.shrink, rng,
                    config.clip_multiplier, config.floor_spectrum);
    result.rho_spent += config.budget.per_step[i];
    result.states.push_back(state);
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a_prev);
  const Eigen::MatrixXd a_inv = lu.inverse();
  if (!a_inv.allFinite()) throw std::domain_error("MvcRec: scaling matrix numerically singular");

  Eigen::MatrixXd estimate = Symmetrize(a_inv * state.Z * a_inv);
  if (config.psd_project) estimate = PsdProject(estimate);
  result.estimate = estimate;
  return result;
}

std::pair<Eigen::MatrixXd, double> ReduceGeneralCovariance(const Eigen::MatrixXd& samples,
                                                           const Eigen::MatrixXd& A_prior,
                                                           double K) {
  if (!(K >= 1.0)) throw std::invalid_argument("ReduceGeneralCovariance: K must be at least 1");
  return {samples * SymInvSqrt(A_prior), K};
}

Eigen::MatrixXd DifferencePairRows(const Eigen::MatrixXd& samples) {
  if (samples.rows() % 2 != 0) {
    throw std::invalid_argument("DifferencePairRows: row count must be even");
  }
  const Eigen::Index m = samples.rows() / 2;
  Eigen::MatrixXd out(m, samples.cols());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    out.row(i) = (samples.row(2 * i) - samples.row(2 * i + 1)) * inv_sqrt2;
  }
  return out;
}

}  // namespace privest
