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
// Seeded benchmark harness.  Every experiment compares the non-private
// empirical estimator, the naive private baseline (t = 1), and the iterative
// estimator for each configured t, aggregating per-trial errors by trimmed
// mean.  Per-trial random streams are derived from (master seed, sweep
// index, trial index), so results are byte-identical for any worker count.

#ifndef PRIVEST_EXPERIMENTS_HPP_
#define PRIVEST_EXPERIMENTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "privest/datagen.hpp"

namespace privest {

enum class CovShape { kIdentity, kSkewed };

struct ExperimentConfig {
  // One of: mean_vs_n, mean_vs_R, mean_vs_rho, cov_vs_n, cov_vs_kappa,
  // cov_vs_rho, heavy_tails, pca.
  std::string experiment = "mean_vs_n";
  int d = 50;
  int n = 1000;
  std::vector<int> n_sweep;       // swept axis for *_vs_n and heavy_tails
  std::vector<double> rho_sweep;  // swept axis for *_vs_rho
  std::vector<double> r_sweep;    // swept axis for mean_vs_R
  std::vector<double> kappa_sweep;  // swept axis for cov_vs_kappa
  double rho = 0.5;
  double radius = 0.0;  // mean prior; 0 means 10 sqrt(d)
  double kappa = 0.0;   // covariance prior; 0 means 10 sqrt(d)
  std::vector<int> t_list = {1, 2};
  double beta = 0.1;
  int trials = 100;
  double trim = 0.1;
  std::uint64_t seed = 1;
  DistKind dist = DistKind::kGaussian;
  CovShape cov_shape = CovShape::kIdentity;
  double clip_multiplier = 1.0;
  double shrink = 1.0;
  bool floor_spectrum = false;  // covariance/pca: clamp noised spectra at zero
  int workers = 1;
  // pca experiment only.
  int pca_k = 2;
  double pca_top_eigenvalue = 4.8;
  double pca_second_eigenvalue = 1.2;
  double pca_bulk_eigenvalue = 0.2;
};

struct ResultRow {
  std::string experiment;
  std::string method;  // "nonprivate" or "t=<k>"
  int t = 0;           // 0 for nonprivate
  int n = 0;
  int d = 0;
  double rho = 0.0;
  double r_or_kappa = 0.0;
  std::string error_metric;
  double error_value = 0.0;  // trimmed mean over trials; NaN if errored
  int trials = 0;
  std::uint64_t seed = 0;
  double rho_spent = 0.0;  // total budget actually consumed (0 for nonprivate)
  std::string error;       // empty on success
};

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config);

// Writes rows with a header, in the declared column order.
void WriteResultCsv(std::ostream& out, const std::vector<ResultRow>& rows);

}  // namespace privest

#endif  // PRIVEST_EXPERIMENTS_HPP_
