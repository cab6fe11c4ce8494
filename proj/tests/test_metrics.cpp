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

#include "privest/metrics.hpp"

#include <cmath>

#include <doctest.h>

#include "privest/datagen.hpp"
#include "privest/rng.hpp"

using namespace privest;

TEST_CASE("L2Error") {
  Eigen::VectorXd a(3), b(3);
  a << 1.0, 2.0, 3.0;
  b << 1.0, 2.0, 7.0;
  CHECK(L2Error(a, b) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(L2Error(a, a) == 0.0);
}

TEST_CASE("MahalanobisCovError is zero at the truth and affine-invariant") {
  Rng rng(1);
  const int d = 6;
  const Eigen::MatrixXd sigma = SkewedCovariance(d, 12.0, rng);
  CHECK(MahalanobisCovError(sigma, sigma) < 1e-10);

  // Hand-checkable diagonal case: estimate = 2 Sigma gives ||I||_F = sqrt(d).
  CHECK(MahalanobisCovError(2.0 * sigma, sigma) ==
        doctest::Approx(std::sqrt(static_cast<double>(d))).epsilon(1e-9));

  // Affine invariance: transform both by an invertible M.
  const Eigen::MatrixXd m = SkewedCovariance(d, 3.0, rng);
  Eigen::MatrixXd est = sigma;
  est(0, 0) += 0.7;
  est(1, 2) += 0.2;
  est(2, 1) += 0.2;
  const double base = MahalanobisCovError(est, sigma);
  const double mapped = MahalanobisCovError(m * est * m.transpose(), m * sigma * m.transpose());
  CHECK(mapped == doctest::Approx(base).epsilon(1e-8));
}

TEST_CASE("MahalanobisMeanError") {
  Eigen::VectorXd est(2), mu(2);
  est << 3.0, 0.0;
  mu << 1.0, 0.0;
  Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(2, 2);
  cov(0, 0) = 4.0;
  // Sigma^{-1/2} (est - mu) = (2/2, 0): norm 1.
  CHECK(MahalanobisMeanError(est, mu, cov) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(MahalanobisMeanError(mu, mu, cov) == 0.0);
}

TEST_CASE("TrimmedMean drops floor(trim k) from each side") {
  const std::vector<double> v{100.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, -50.0};
  // k = 10, trim = 0.1: drop -50 and 100, average 1..8 = 4.5.
  CHECK(TrimmedMean(v, 0.1) == doctest::Approx(4.5).epsilon(1e-15));
  // trim = 0 is the plain mean.
  CHECK(TrimmedMean(v, 0.0) == doctest::Approx(8.6).epsilon(1e-12));
  // k = 10, trim = 0.25: floor(2.5) = 2 dropped per side -> average of 2..7.
  CHECK(TrimmedMean(v, 0.25) == doctest::Approx(4.5).epsilon(1e-15));
  const std::vector<double> single{3.0};
  CHECK(TrimmedMean(single, 0.1) == 3.0);
  CHECK_THROWS(TrimmedMean(std::vector<double>{}, 0.1));
  CHECK_THROWS(TrimmedMean(single, 0.5));
}

TEST_CASE("TrimmedMean is insensitive to input order") {
  std::vector<double> v{5.0, -2.0, 9.0, 1.0, 0.0, 3.0, 100.0, -100.0, 2.0, 4.0};
  const double a = TrimmedMean(v, 0.1);
  std::vector<double> shuffled{100.0, 4.0, -100.0, 0.0, 9.0, 2.0, 5.0, 1.0, 3.0, -2.0};
  CHECK(TrimmedMean(shuffled, 0.1) == a);
}

TEST_CASE("EigvecAlignment") {
  Eigen::VectorXd e1(3), e2(3);
  e1 << 1.0, 0.0, 0.0;
  e2 << 0.0, 1.0, 0.0;
  CHECK(EigvecAlignment(e1, e1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(EigvecAlignment(e1, -e1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(EigvecAlignment(e1, e2) == doctest::Approx(0.0).epsilon(1e-15));
  // Unnormalized inputs are normalized internally.
  CHECK(EigvecAlignment(5.0 * e1, 0.1 * e1) == doctest::Approx(1.0).epsilon(1e-15));
  Eigen::VectorXd diag(3);
  diag << 1.0, 1.0, 0.0;
  CHECK(EigvecAlignment(e1, diag) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("TrialReport aggregates with the trimmed mean") {
  std::vector<double> errors{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 1000.0};
  const TrialReport report = TrialReport::Make("iterative", "d10n1000", errors, 0.1);
  CHECK(report.method == "iterative");
  CHECK(report.config_id == "d10n1000");
  CHECK(report.per_trial_errors.size() == 10);
  CHECK(report.aggregate == doctest::Approx(TrimmedMean(report.per_trial_errors, 0.1)));
  CHECK(report.aggregate == doctest::Approx(5.5).epsilon(1e-12));
}
