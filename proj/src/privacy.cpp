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

#include "privest/privacy.hpp"

#include <cmath>
#include <stdexcept>

namespace privest {

NoiseScale NoiseScale::ForZcdp(Sensitivity delta, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("NoiseScale: rho must be positive");
  if (!(delta.l2 >= 0.0) || !std::isfinite(delta.l2)) {
    throw std::invalid_argument("NoiseScale: sensitivity must be finite and nonnegative");
  }
  return NoiseScale{delta.l2 / std::sqrt(2.0 * rho)};
}

PrivacyBudget SplitBudget(double rho_total, int t) {
  if (!(rho_total > 0.0)) throw std::invalid_argument("SplitBudget: rho_total must be positive");
  if (t < 1) throw std::invalid_argument("SplitBudget: t must be at least 1");
  PrivacyBudget budget;
  budget.rho_total = rho_total;
  if (t == 1) {
    budget.per_step = {rho_total};
    return budget;
  }
  budget.per_step.assign(t, rho_total / (4.0 * (t - 1)));
  budget.per_step.back() = 3.0 * rho_total / 4.0;
  return budget;
}

PrivacyBudget UniformBudget(double rho_total, int t) {
  if (!(rho_total > 0.0)) throw std::invalid_argument("UniformBudget: rho_total must be positive");
  if (t < 1) throw std::invalid_argument("UniformBudget: t must be at least 1");
  PrivacyBudget budget;
  budget.rho_total = rho_total;
  budget.per_step.assign(t, rho_total / t);
  return budget;
}

Eigen::VectorXd GaussianMechanism(const Eigen::VectorXd& value, Sensitivity delta,
                                  double rho, Rng& rng) {
  if (!value.allFinite()) throw std::invalid_argument("GaussianMechanism: non-finite input");
  const NoiseScale scale = NoiseScale::ForZcdp(delta, rho);
  if (scale.sigma == 0.0) return value;
  return value + scale.sigma * rng.GaussianVector(static_cast<int>(value.size()));
}

Eigen::MatrixXd SymmetricGaussianNoise(int d, NoiseScale sigma, Rng& rng) {
  if (d < 1) throw std::invalid_argument("SymmetricGaussianNoise: d must be at least 1");
  Eigen::MatrixXd y(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const double v = sigma.sigma * rng.Gaussian();
      y(i, j) = v;
      y(j, i) = v;
    }
  }
  return y;
}

double ZcdpToApproxDp(double rho, double delta) {
  if (!(rho >= 0.0)) throw std::invalid_argument("ZcdpToApproxDp: rho must be nonnegative");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("ZcdpToApproxDp: delta must be in (0, 1)");
  }
  return rho + 2.0 * std::sqrt(rho * std::log(1.0 / delta));
}

double PureDpToZcdp(double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("PureDpToZcdp: epsilon must be nonnegative");
  return 0.5 * epsilon * epsilon;
}

}  // namespace privest
