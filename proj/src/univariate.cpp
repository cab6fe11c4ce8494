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

#include "privest/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace privest {

namespace {

void CheckStepParams(std::size_t n, const Interval& interval, double rho_s, double beta_s) {
  if (n == 0) throw std::invalid_argument("univariate step: empty sample");
  if (!(interval.lo <= interval.hi)) throw std::invalid_argument("univariate step: invalid interval");
  if (!(rho_s > 0.0)) throw std::invalid_argument("univariate step: rho must be positive");
  if (!(beta_s > 0.0 && beta_s < 1.0)) {
    throw std::invalid_argument("univariate step: beta must be in (0, 1)");
  }
}

void CheckConfig(const UnivariateConfig& config) {
  if (config.t < 1) throw std::invalid_argument("univariate: t must be at least 1");
  if (config.budget.steps() != config.t) {
    throw std::invalid_argument("univariate: budget length must equal t");
  }
}

// Failure budget for iteration i (0-based) out of t, matching the
// beta/(4(t-1)) loop / beta/4 final schedule.
double StepBeta(double beta, int t, int i) {
  if (i == t - 1) return beta / 4.0;
  return beta / (4.0 * (t - 1));
}

}  // namespace

Interval UvmStep(std::span<const double> samples, Interval interval, double sigma2,
                 double rho_s, double beta_s, Rng& rng) {
  CheckStepParams(samples.size(), interval, rho_s, beta_s);
  if (!(sigma2 > 0.0)) throw std::invalid_argument("UvmStep: sigma2 must be positive");
  const double n = static_cast<double>(samples.size());
  const double sigma = std::sqrt(sigma2);
  const double tail = sigma * std::sqrt(2.0 * std::log(2.0 * n / beta_s));
  const double clip_lo = interval.lo - tail;
  const double clip_hi = interval.hi + tail;

  double sum = 0.0;
  for (double x : samples) sum += std::clamp(x, clip_lo, clip_hi);
  const double clipped_mean = sum / n;

  const double delta = (interval.width() + 2.0 * tail) / n;
  const double noise_sd = delta / std::sqrt(2.0 * rho_s);
  const double z = clipped_mean + noise_sd * rng.Gaussian();

  const double half_width =
      std::sqrt(2.0 * (sigma2 / n + noise_sd * noise_sd) * std::log(2.0 / beta_s));
  return {z - half_width, z + half_width};
}

UnivariateResult UvmRec(std::span<const double> samples, Interval interval, double sigma2,
                        const UnivariateConfig& config, Rng& rng) {
  CheckConfig(config);
  UnivariateResult result;
  result.intervals.push_back(interval);
  Interval current = interval;
  for (int i = 0; i < config.t; ++i) {
    current = UvmStep(samples, current, sigma2, config.budget.per_step[i],
                      StepBeta(config.beta, config.t, i), rng);
    result.rho_spent += config.budget.per_step[i];
    result.intervals.push_back(current);
  }
  result.final_interval = current;
  result.estimate = current.midpoint();
  return result;
}

Interval UvvStep(std::span<const double> samples, Interval interval,
                 double rho_s, double beta_s, Rng& rng) {
  CheckStepParams(samples.size(), interval, rho_s, beta_s);
  if (!(interval.lo > 0.0)) throw std::invalid_argument("UvvStep: interval lower end must be positive");
  const double n = static_cast<double>(samples.size());
  const double log1b = std::log(1.0 / beta_s);
  const double clip_hi = interval.hi * (1.0 + 2.0 * std::sqrt(log1b) + 2.0 * log1b);

  double sum = 0.0;
  for (double x : samples) sum += std::clamp(x * x, 0.0, clip_hi);
  const double clipped_mean = sum / n;

  const double delta = clip_hi / n;
  const double noise_sd = delta / std::sqrt(2.0 * rho_s);
  const double z = clipped_mean + noise_sd * rng.Gaussian();

  // Confidence half-widths: the privacy term is the exact tail bound on the
  // added noise (delta already carries the u scaling), while the empirical
  // chi^2 concentration terms are conservatively scaled by the upper bound u.
  const double log4b = std::log(4.0 / beta_s);
  const double priv_term = delta * std::sqrt(log4b) / std::sqrt(rho_s);
  const double samp_term = std::sqrt(log4b / n);
  const double lo_candidate =
      z - priv_term - 2.0 * interval.hi * (samp_term + log4b / n);
  const double hi_candidate = z + priv_term + 2.0 * interval.hi * samp_term;

  Interval out{std::max(interval.lo, lo_candidate), std::min(interval.hi, hi_candidate)};
  if (out.lo > out.hi) {
    // Empty intersection (the noised interval landed entirely outside
    // [lo, hi]): collapse to the nearest admissible point.
    const double p = std::clamp(z, interval.lo, interval.hi);
    out = {p, p};
  }
  return out;
}

UnivariateResult UvvRec(std::span<const double> samples, Interval interval,
                        const UnivariateConfig& config, Rng& rng) {
  CheckConfig(config);
  UnivariateResult result;
  result.intervals.push_back(interval);
  Interval current = interval;
  for (int i = 0; i < config.t; ++i) {
    current = UvvStep(samples, current, config.budget.per_step[i],
                      StepBeta(config.beta, config.t, i), rng);
    result.rho_spent += config.budget.per_step[i];
    result.intervals.push_back(current);
  }
  result.final_interval = current;
  result.estimate = current.midpoint();
  return result;
}

std::vector<double> DifferencePairs(std::span<const double> samples) {
  if (samples.size() % 2 != 0) {
    throw std::invalid_argument("DifferencePairs: sample count must be even");
  }
  std::vector<double> out(samples.size() / 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (samples[2 * i] - samples[2 * i + 1]) * inv_sqrt2;
  }
  return out;
}

}  // namespace privest
