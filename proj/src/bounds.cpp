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

#include "privest/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace privest {

namespace {

void CheckBeta(double beta, const char* who) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": beta must be in (0, 1)");
  }
}

}  // namespace

double GammaNormBound(int d, double m, double beta) {
  if (d < 1) throw std::invalid_argument("GammaNormBound: d must be at least 1");
  if (!(beta > 0.0)) throw std::invalid_argument("GammaNormBound: beta must be positive");
  if (!(m / beta >= 1.0)) {
    throw std::invalid_argument("GammaNormBound: m/beta must be at least 1");
  }
  const double log_term = std::log(m / beta);
  return std::sqrt(d + 2.0 * std::sqrt(d * log_term) + 2.0 * log_term);
}

double EtaEmpiricalCovBound(int d, int n, double beta) {
  if (d < 1 || n < 1) throw std::invalid_argument("EtaEmpiricalCovBound: d, n must be >= 1");
  CheckBeta(beta, "EtaEmpiricalCovBound");
  const double s = std::sqrt(static_cast<double>(d) / n) +
                   std::sqrt(2.0 * std::log(2.0 / beta) / n);
  return 2.0 * s + s * s;
}

double SymmetricGaussianSpectralFactor(int d, double beta) {
  if (d < 2) throw std::invalid_argument("SymmetricGaussianSpectralFactor: d must be >= 2");
  CheckBeta(beta, "SymmetricGaussianSpectralFactor");
  const double logd = std::log(static_cast<double>(d));
  const double eps = std::cbrt(logd / d);
  return 2.0 * std::sqrt(static_cast<double>(d)) +
         2.0 * std::pow(static_cast<double>(d), 1.0 / 6.0) * std::cbrt(logd) +
         6.0 * (1.0 + eps) * std::sqrt(logd) / std::sqrt(std::log1p(eps)) +
         2.0 * std::sqrt(2.0 * std::log(1.0 / beta));
}

double NuNoiseSpectralBound(int d, int n, double rho, double beta) {
  if (d < 2) throw std::invalid_argument("NuNoiseSpectralBound: d must be >= 2");
  if (n < 1) throw std::invalid_argument("NuNoiseSpectralBound: n must be >= 1");
  if (!(rho > 0.0)) throw std::invalid_argument("NuNoiseSpectralBound: rho must be positive");
  CheckBeta(beta, "NuNoiseSpectralBound");
  const double gamma = GammaNormBound(d, static_cast<double>(n), beta);
  return gamma * gamma / (n * std::sqrt(rho)) * SymmetricGaussianSpectralFactor(d, beta);
}

double UnivariateGaussianTail(double sigma, double beta) {
  if (!(sigma > 0.0)) throw std::invalid_argument("UnivariateGaussianTail: sigma must be positive");
  CheckBeta(beta, "UnivariateGaussianTail");
  return sigma * std::sqrt(2.0 * std::log(2.0 / beta));
}

double Chi2UpperTail(double k, double beta) {
  if (!(k > 0.0)) throw std::invalid_argument("Chi2UpperTail: k must be positive");
  CheckBeta(beta, "Chi2UpperTail");
  const double log_term = std::log(1.0 / beta);
  return k + 2.0 * std::sqrt(k * log_term) + 2.0 * log_term;
}

}  // namespace privest
