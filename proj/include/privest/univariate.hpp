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
//
// Iterative confidence-interval estimators for the mean and variance of a
// univariate Gaussian under zCDP.  Each step clips the data to a slightly
// widened version of the current interval, releases a noised statistic via
// the Gaussian mechanism, and derives a narrower interval.

#ifndef PRIVEST_UNIVARIATE_HPP_
#define PRIVEST_UNIVARIATE_HPP_

#include <span>
#include <vector>

#include "privest/privacy.hpp"
#include "privest/rng.hpp"

namespace privest {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct UnivariateConfig {
  int t = 1;
  PrivacyBudget budget;       // one entry per iteration
  double beta = 0.1;          // total failure probability
};

struct UnivariateResult {
  double estimate = 0.0;
  Interval final_interval;
  std::vector<Interval> intervals;  // [input, step 1, ..., step t]
  double rho_spent = 0.0;
};

// One private shrink of a mean confidence interval, for known variance
// sigma2.  Clips samples to the interval widened by the Gaussian tail
// radius, noises the clipped mean, and returns a two-sided confidence
// interval around the noised value.
Interval UvmStep(std::span<const double> samples, Interval interval, double sigma2,
                 double rho_s, double beta_s, Rng& rng);

// Iterated mean estimator: t-1 shrink steps at failure budget beta/(4(t-1))
// each, then a final step at beta/4.  Returns the final midpoint.
UnivariateResult UvmRec(std::span<const double> samples, Interval interval, double sigma2,
                        const UnivariateConfig& config, Rng& rng);

// One private shrink of a variance confidence interval.  Samples must be
// zero-mean (use DifferencePairs first if the mean is unknown); the interval
// [lo, hi] must satisfy 0 < lo <= hi.  The result is intersected with the
// input interval.
Interval UvvStep(std::span<const double> samples, Interval interval,
                 double rho_s, double beta_s, Rng& rng);

UnivariateResult UvvRec(std::span<const double> samples, Interval interval,
                        const UnivariateConfig& config, Rng& rng);

// Maps 2m samples from N(mu, sigma^2) to m samples from N(0, sigma^2):
// out[i] = (in[2i] - in[2i+1]) / sqrt(2).
std::vector<double> DifferencePairs(std::span<const double> samples);

}  // namespace privest

#endif  // PRIVEST_UNIVARIATE_HPP_
