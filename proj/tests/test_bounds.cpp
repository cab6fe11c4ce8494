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

#include <doctest.h>

#include "privest/privacy.hpp"
#include "privest/rng.hpp"

using namespace privest;

namespace {

// Independent re-evaluation of the norm-radius formula, kept deliberately
// separate from the implementation under test.
double GammaOracle(int d, double m, double beta) {
  const double log_term = std::log(m / beta);
  return std::sqrt(d + 2.0 * std::sqrt(d * log_term) + 2.0 * log_term);
}

}  // namespace

TEST_CASE("GammaNormBound matches direct formula evaluation") {
  CHECK(GammaNormBound(1, 1.0, 0.999999999999) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(GammaNormBound(50, 1000.0, 0.01) == doctest::Approx(GammaOracle(50, 1000.0, 0.01)));
  CHECK(GammaNormBound(50, 1000.0, 0.01) == doctest::Approx(11.0).epsilon(0.01));
  CHECK(GammaNormBound(10, 3000.0, 0.05) == doctest::Approx(GammaOracle(10, 3000.0, 0.05)));
}

TEST_CASE("GammaNormBound monotone in d and in m/beta") {
  for (int d = 1; d < 30; ++d) {
    CHECK(GammaNormBound(d + 1, 100.0, 0.05) > GammaNormBound(d, 100.0, 0.05));
  }
  CHECK(GammaNormBound(5, 200.0, 0.05) > GammaNormBound(5, 100.0, 0.05));
  CHECK(GammaNormBound(5, 100.0, 0.01) > GammaNormBound(5, 100.0, 0.05));
}

TEST_CASE("GammaNormBound rejects negative log regimes") {
  CHECK_THROWS(GammaNormBound(5, 0.5, 0.9));
}

TEST_CASE("Gamma squared at m=1 equals the chi-squared upper tail") {
  for (int d : {1, 2, 10, 50}) {
    for (double beta : {0.01, 0.05, 0.3}) {
      const double g = GammaNormBound(d, 1.0, beta);
      CHECK(g * g == doctest::Approx(Chi2UpperTail(d, beta)).epsilon(1e-12));
    }
  }
}

TEST_CASE("EtaEmpiricalCovBound direct evaluation and n-limit") {
  // d=10, n=1000, beta=0.05: s = 0.1 + sqrt(2 ln 40 / 1000)
  const double s = 0.1 + std::sqrt(2.0 * std::log(40.0) / 1000.0);
  CHECK(EtaEmpiricalCovBound(10, 1000, 0.05) == doctest::Approx(2.0 * s + s * s).epsilon(1e-12));
  CHECK(EtaEmpiricalCovBound(10, 1000, 0.05) == doctest::Approx(0.406).epsilon(0.01));
  CHECK(EtaEmpiricalCovBound(10, 100000000, 0.05) < 2e-3);
  CHECK(EtaEmpiricalCovBound(10, 100, 0.05) > EtaEmpiricalCovBound(10, 1000, 0.05));
}

TEST_CASE("EtaEmpiricalCovBound covers the empirical spectral error") {
  // Sigma = I, d = 10, n = 1000: ||Sigma_hat - I||_2 <= eta in at least 95%
  // of 200 trials at beta = 0.05.
  Rng rng(5);
  const int d = 10, n = 1000, trials = 200;
  const double eta = EtaEmpiricalCovBound(d, n, 0.05);
  int covered = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd x = rng.GaussianVector(d);
      sum += x * x.transpose();
    }
    const Eigen::MatrixXd diff = sum / n - Eigen::MatrixXd::Identity(d, d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff);
    if (es.eigenvalues().cwiseAbs().maxCoeff() <= eta) ++covered;
  }
  CHECK(covered >= 190);
}

TEST_CASE("NuNoiseSpectralBound second independent evaluation") {
  const int d = 10, n = 5000;
  const double rho = 0.25, beta = 0.05;
  const double gamma = GammaOracle(d, n, beta);
  const double logd = std::log(static_cast<double>(d));
  const double eps = std::cbrt(logd / d);
  const double bracket = 2.0 * std::sqrt(static_cast<double>(d)) +
                         2.0 * std::pow(static_cast<double>(d), 1.0 / 6.0) * std::cbrt(logd) +
                         6.0 * (1.0 + eps) * std::sqrt(logd) / std::sqrt(std::log(1.0 + eps)) +
                         2.0 * std::sqrt(2.0 * std::log(1.0 / beta));
  const double expected = gamma * gamma / (n * std::sqrt(rho)) * bracket;
  const double nu = NuNoiseSpectralBound(d, n, rho, beta);
  CHECK(nu > 0.0);
  CHECK(std::isfinite(nu));
  CHECK(nu == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("NuNoiseSpectralBound scales as gamma^2 / n") {
  const int d = 10;
  const double rho = 0.25, beta = 0.05;
  const double nu1 = NuNoiseSpectralBound(d, 1000, rho, beta);
  const double nu2 = NuNoiseSpectralBound(d, 2000, rho, beta);
  const double g1 = GammaNormBound(d, 1000.0, beta);
  const double g2 = GammaNormBound(d, 2000.0, beta);
  CHECK(nu2 == doctest::Approx(nu1 * (g2 * g2 * 1000.0) / (g1 * g1 * 2000.0)).epsilon(1e-12));
}

TEST_CASE("NuNoiseSpectralBound requires d >= 2") {
  CHECK_THROWS(NuNoiseSpectralBound(1, 100, 0.5, 0.05));
}

TEST_CASE("Symmetric Gaussian matrix spectral coverage") {
  // d = 20, entry std 1: ||Y||_2 <= sigma * factor in at least 95% of 500
  // draws at beta = 0.05.
  Rng rng(11);
  const int d = 20, draws = 500;
  const double bound = SymmetricGaussianSpectralFactor(d, 0.05);
  int covered = 0;
  for (int i = 0; i < draws; ++i) {
    const Eigen::MatrixXd y = SymmetricGaussianNoise(d, NoiseScale{1.0}, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
    if (es.eigenvalues().cwiseAbs().maxCoeff() <= bound) ++covered;
  }
  CHECK(covered >= 475);
}

TEST_CASE("UnivariateGaussianTail") {
  CHECK(UnivariateGaussianTail(1.0, 0.05) == doctest::Approx(std::sqrt(2.0 * std::log(40.0))));
  CHECK(UnivariateGaussianTail(1.0, 0.05) == doctest::Approx(2.716).epsilon(0.001));
  // ln(2 / (2/e^2)) = 2, so the radius is sigma * 2.
  const double beta = 2.0 / std::exp(2.0);
  CHECK(UnivariateGaussianTail(3.0, beta) == doctest::Approx(6.0).epsilon(1e-12));
  // Linear in sigma.
  CHECK(UnivariateGaussianTail(7.0, 0.1) ==
        doctest::Approx(7.0 * UnivariateGaussianTail(1.0, 0.1)).epsilon(1e-12));
}

TEST_CASE("Chi2UpperTail values and Monte Carlo exceedance rate") {
  CHECK(Chi2UpperTail(1.0, 0.05) ==
        doctest::Approx(1.0 + 2.0 * std::sqrt(std::log(20.0)) + 2.0 * std::log(20.0)));
  CHECK(Chi2UpperTail(1.0, 0.05) == doctest::Approx(10.45).epsilon(0.001));
  CHECK(Chi2UpperTail(5.0, 0.999999) == doctest::Approx(5.0).epsilon(0.01));

  Rng rng(3);
  const double bound = Chi2UpperTail(1.0, 0.05);
  int exceed = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const double g = rng.Gaussian();
    if (g * g > bound) ++exceed;
  }
  CHECK(static_cast<double>(exceed) / draws <= 0.05);
}
