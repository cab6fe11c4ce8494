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
// Executable concentration-bound formulas used to size clipping regions and
// confidence regions.  All logarithms are natural.

#ifndef PRIVEST_BOUNDS_HPP_
#define PRIVEST_BOUNDS_HPP_

namespace privest {

// High-probability radius for the norm of a d-dimensional standard Gaussian:
// sqrt(d + 2 sqrt(d ln(m/beta)) + 2 ln(m/beta)).  m = n union-bounds over a
// dataset of n points; m = 1 bounds a single draw.
double GammaNormBound(int d, double m, double beta);

// Relative spectral-norm error of the empirical covariance of n Gaussian
// samples in d dimensions: 2s + s^2 with s = sqrt(d/n) + sqrt(2 ln(2/beta)/n).
double EtaEmpiricalCovBound(int d, int n, double beta);

// Spectral-norm bound on a calibrated symmetric Gaussian noise matrix,
// expressed relative to the clipped-covariance scale:
// (gamma^2 / (n sqrt(rho))) * bracket(d, beta).  Requires d >= 2.
double NuNoiseSpectralBound(int d, int n, double rho, double beta);

// The dimension/confidence factor of the symmetric-Gaussian spectral bound;
// entry std sigma times this factor bounds the matrix spectral norm with
// probability 1 - beta.  Requires d >= 2.
double SymmetricGaussianSpectralFactor(int d, double beta);

// Two-sided Gaussian tail radius: sigma sqrt(2 ln(2/beta)).
double UnivariateGaussianTail(double sigma, double beta);

// Laurent-Massart upper tail for chi-squared with k degrees of freedom:
// k + 2 sqrt(k ln(1/beta)) + 2 ln(1/beta).
double Chi2UpperTail(double k, double beta);

}  // namespace privest

#endif  // PRIVEST_BOUNDS_HPP_
