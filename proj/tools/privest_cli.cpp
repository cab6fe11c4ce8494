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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privest/covariance.hpp"
#include "privest/csv.hpp"
#include "privest/experiments.hpp"
#include "privest/linalg.hpp"
#include "privest/mean.hpp"
#include "privest/metrics.hpp"
#include "privest/pca.hpp"
#include "privest/privacy.hpp"
#include "privest/univariate.hpp"

namespace {

using namespace privest;

void PrintVector(std::ostream& out, const Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << FormatDouble(v[i]);
  }
  out << '\n';
}

std::vector<double> FirstColumn(const Eigen::MatrixXd& m) {
  std::vector<double> v(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) v[i] = m(i, 0);
  return v;
}

Eigen::MatrixXd EvenRows(const Eigen::MatrixXd& data) {
  if (data.rows() % 2 == 0) return data;
  std::cerr << "note: odd row count, dropping the last row for pair differencing\n";
  return data.topRows(data.rows() - 1);
}

int RunMeanEst(const std::string& input, const std::string& output, double radius, double rho,
               int t, double beta, std::uint64_t seed, double clip, const std::string& proxy_csv) {
  Eigen::MatrixXd data = ReadMatrixCsv(input);
  Eigen::MatrixXd proxy_sqrt;
  if (!proxy_csv.empty()) {
    const Eigen::MatrixXd proxy = ReadMatrixCsv(proxy_csv);
    proxy_sqrt = SymSqrt(proxy);
    data = Whiten(data, proxy);
  }
  const int d = static_cast<int>(data.cols());

  MeanConfig config;
  config.t = t;
  config.budget = SplitBudget(rho, t);
  config.beta = beta;
  config.clip_multiplier = clip;

  Rng rng(seed);
  ConfidenceBall ball{Eigen::VectorXd::Zero(d), radius};
  MeanResult result = MvmRec(data, ball, config, rng);
  if (proxy_sqrt.size() > 0) result.estimate = proxy_sqrt * result.estimate;

  std::cout << "estimate: ";
  PrintVector(std::cout, result.estimate);
  std::cout << "radius_schedule: ";
  const std::vector<double> radii =
      RadiusRecurrence(radius, d, static_cast<int>(data.rows()), config.budget, beta, clip);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0) std::cout << ',';
    std::cout << FormatDouble(radii[i]);
  }
  std::cout << "\nrho_spent: " << FormatDouble(result.rho_spent) << '\n';

  if (!output.empty()) WriteMatrixCsv(output, result.estimate.transpose());
  return 0;
}

int RunCovEst(const std::string& input, const std::string& output, double kappa, double rho,
              int t, double beta, std::uint64_t seed, bool mean_known, double shrink,
              bool psd_project, double clip, bool floor_spectrum) {
  Eigen::MatrixXd data = ReadMatrixCsv(input);
  if (!mean_known) data = DifferencePairRows(EvenRows(data));
  const int d = static_cast<int>(data.cols());

  CovConfig config;
  config.t = t;
  config.budget = SplitBudget(rho, t);
  config.beta = beta;
  config.shrink = shrink;
  config.psd_project = psd_project;
  config.clip_multiplier = clip;
  config.floor_spectrum = floor_spectrum;

  Rng rng(seed);
  const CovResult result =
      MvcRec(data, Eigen::MatrixXd::Identity(d, d), kappa, config, rng);
  std::cerr << "rho_spent: " << FormatDouble(result.rho_spent) << '\n';

  if (!output.empty()) {
    WriteMatrixCsv(output, result.estimate);
  } else {
    WriteMatrixCsv(std::cout, result.estimate);
  }
  return 0;
}

int RunUvMean(const std::string& input, double lo, double hi, double sigma2, double rho, int t,
              double beta, std::uint64_t seed) {
  const std::vector<double> samples = FirstColumn(ReadMatrixCsv(input));
  UnivariateConfig config{t, SplitBudget(rho, t), beta};
  Rng rng(seed);
  const UnivariateResult result = UvmRec(samples, {lo, hi}, sigma2, config, rng);
  std::cout << "estimate: " << FormatDouble(result.estimate) << '\n'
            << "interval: " << FormatDouble(result.final_interval.lo) << ','
            << FormatDouble(result.final_interval.hi) << '\n'
            << "rho_spent: " << FormatDouble(result.rho_spent) << '\n';
  return 0;
}

int RunUvVar(const std::string& input, double lo, double hi, double rho, int t, double beta,
             std::uint64_t seed, bool mean_known) {
  std::vector<double> samples = FirstColumn(ReadMatrixCsv(input));
  if (!mean_known) {
    if (samples.size() % 2 != 0) {
      std::cerr << "note: odd sample count, dropping the last sample for pair differencing\n";
      samples.pop_back();
    }
    samples = DifferencePairs(samples);
  }
  UnivariateConfig config{t, SplitBudget(rho, t), beta};
  Rng rng(seed);
  const UnivariateResult result = UvvRec(samples, {lo, hi}, config, rng);
  std::cout << "estimate: " << FormatDouble(result.estimate) << '\n'
            << "interval: " << FormatDouble(result.final_interval.lo) << ','
            << FormatDouble(result.final_interval.hi) << '\n'
            << "rho_spent: " << FormatDouble(result.rho_spent) << '\n';
  return 0;
}

int RunPca(const std::string& input, const std::string& output, const std::string& projected_out,
           double scale, double kappa, double rho, int t, int k, double beta, std::uint64_t seed,
           bool compare_nonprivate, bool noiseless, double shrink, double clip,
           bool floor_spectrum) {
  const Eigen::MatrixXd data = ReadMatrixCsv(input);
  PcaConfig config;
  config.scale_factor = scale;
  config.kappa = kappa;
  config.rho = rho;
  config.t = t;
  config.k = k;
  config.beta = beta;
  config.shrink = shrink;
  config.clip_multiplier = clip;
  config.floor_spectrum = floor_spectrum;
  config.noiseless = noiseless;

  Rng rng(seed);
  const PcaResult result = PrivatePca(data, config, rng, compare_nonprivate);

  std::cout << "eigenvalues: ";
  PrintVector(std::cout, result.eigenvalues);
  if (compare_nonprivate) {
    std::cout << "alignments: ";
    for (std::size_t i = 0; i < result.alignments.size(); ++i) {
      if (i > 0) std::cout << ',';
      std::cout << FormatDouble(result.alignments[i]);
    }
    std::cout << '\n';
  }
  if (!output.empty()) {
    WriteMatrixCsv(output, result.components);
  } else {
    WriteMatrixCsv(std::cout, result.components);
  }
  if (!projected_out.empty()) WriteMatrixCsv(projected_out, result.projected);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private mean/covariance estimation toolkit"};
  app.require_subcommand(1);

  // Shared option storage.
  std::string input, output, proxy_csv, projected_out;
  double rho = 0.5, beta = 0.1, radius = 0.0, kappa = 0.0, sigma2 = 1.0;
  double lo = 0.0, hi = 0.0, clip = 1.0, shrink = 1.0, scale = 1.0, trim = 0.1;
  int t = 2, k = 2, d = 50, n = 1000, trials = 100, workers = 1;
  std::uint64_t seed = 1;
  bool mean_known = false, psd_project = false, compare_nonprivate = false, noiseless = false;
  bool floor_spectrum = false;

  auto* mean_est = app.add_subcommand("mean-est", "Private mean of a CSV dataset");
  mean_est->add_option("--input", input)->required();
  mean_est->add_option("--output", output);
  mean_est->add_option("--radius", radius, "Prior l2 bound on the mean")->required();
  mean_est->add_option("--rho", rho);
  mean_est->add_option("--t", t);
  mean_est->add_option("--beta", beta);
  mean_est->add_option("--seed", seed);
  mean_est->add_option("--clip", clip, "Clipping-margin multiplier in (0, 1]");
  mean_est->add_option("--cov-proxy", proxy_csv, "CSV of a known covariance proxy");

  auto* cov_est = app.add_subcommand("cov-est", "Private covariance of a CSV dataset");
  cov_est->add_option("--input", input)->required();
  cov_est->add_option("--output", output);
  cov_est->add_option("--kappa", kappa, "Prior bound: I <= Sigma <= kappa I")->required();
  cov_est->add_option("--rho", rho);
  cov_est->add_option("--t", t);
  cov_est->add_option("--beta", beta);
  cov_est->add_option("--seed", seed);
  cov_est->add_option("--shrink", shrink, "Confidence-ellipsoid shrink factor in (0, 1]");
  cov_est->add_option("--clip", clip, "Clipping-radius multiplier in (0, 1]");
  cov_est->add_flag("--mean-known", mean_known, "Skip pair differencing (data is zero-mean)");
  cov_est->add_flag("--psd-project", psd_project, "Clamp negative eigenvalues of the estimate");
  cov_est->add_flag("--floor-spectrum", floor_spectrum,
                    "Clamp the noised spectrum at zero instead of failing in noisy regimes");

  auto* uv_mean = app.add_subcommand("uv-mean", "Private univariate mean (known variance)");
  uv_mean->add_option("--input", input)->required();
  uv_mean->add_option("--lo", lo)->required();
  uv_mean->add_option("--hi", hi)->required();
  uv_mean->add_option("--sigma2", sigma2)->required();
  uv_mean->add_option("--rho", rho);
  uv_mean->add_option("--t", t);
  uv_mean->add_option("--beta", beta);
  uv_mean->add_option("--seed", seed);

  auto* uv_var = app.add_subcommand("uv-var", "Private univariate variance");
  uv_var->add_option("--input", input)->required();
  uv_var->add_option("--lo", lo, "Lower variance bound (> 0)")->default_val(1.0);
  uv_var->add_option("--hi", hi, "Upper variance bound (kappa)")->required();
  uv_var->add_option("--rho", rho);
  uv_var->add_option("--t", t);
  uv_var->add_option("--beta", beta);
  uv_var->add_option("--seed", seed);
  uv_var->add_flag("--mean-known", mean_known, "Skip pair differencing (data is zero-mean)");

  ExperimentConfig ec;
  std::string experiment_name, dist = "gaussian", cov_shape = "identity";
  std::vector<int> n_sweep, t_list;
  std::vector<double> rho_sweep, r_sweep, kappa_sweep;
  auto* experiment = app.add_subcommand("experiment", "Run a benchmark sweep, emit CSV");
  experiment->add_option("name", experiment_name,
                         "mean_vs_n|mean_vs_R|mean_vs_rho|cov_vs_n|cov_vs_kappa|cov_vs_rho|"
                         "heavy_tails|pca")
      ->required();
  experiment->add_option("--output", output);
  experiment->add_option("--d", d);
  experiment->add_option("--n", n);
  experiment->add_option("--n-sweep", n_sweep)->delimiter(',');
  experiment->add_option("--rho", rho);
  experiment->add_option("--rho-sweep", rho_sweep)->delimiter(',');
  experiment->add_option("--radius", radius);
  experiment->add_option("--r-sweep", r_sweep)->delimiter(',');
  experiment->add_option("--kappa", kappa);
  experiment->add_option("--kappa-sweep", kappa_sweep)->delimiter(',');
  experiment->add_option("--t-list", t_list)->delimiter(',');
  experiment->add_option("--beta", beta);
  experiment->add_option("--trials", trials);
  experiment->add_option("--trim", trim);
  experiment->add_option("--seed", seed);
  experiment->add_option("--dist", dist)->check(CLI::IsMember({"gaussian", "laplace", "student-t"}));
  experiment->add_option("--cov-shape", cov_shape)->check(CLI::IsMember({"identity", "skewed"}));
  experiment->add_option("--clip", clip);
  experiment->add_option("--shrink", shrink);
  experiment->add_flag("--floor-spectrum", floor_spectrum);
  experiment->add_option("--workers", workers);

  auto* pca = app.add_subcommand("pca", "Private principal components of a CSV dataset");
  pca->add_option("--input", input)->required();
  pca->add_option("--output", output, "Components CSV (d x k)");
  pca->add_option("--projected-output", projected_out, "Projected data CSV (n x k)");
  pca->add_option("--scale", scale, "Pre-scaling factor applied to the data");
  pca->add_option("--kappa", kappa)->required();
  pca->add_option("--rho", rho);
  pca->add_option("--t", t);
  pca->add_option("--k", k);
  pca->add_option("--beta", beta);
  pca->add_option("--seed", seed);
  pca->add_option("--shrink", shrink);
  pca->add_option("--clip", clip);
  pca->add_flag("--floor-spectrum", floor_spectrum,
                "Clamp the noised spectrum at zero instead of failing in noisy regimes");
  pca->add_flag("--compare-nonprivate", compare_nonprivate,
                "Also report alignment with the non-private components");
  pca->add_flag("--noiseless", noiseless, "Debug mode: effectively infinite rho");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mean_est->parsed()) {
      return RunMeanEst(input, output, radius, rho, t, beta, seed, clip, proxy_csv);
    }
    if (cov_est->parsed()) {
      return RunCovEst(input, output, kappa, rho, t, beta, seed, mean_known, shrink, psd_project,
                       clip, floor_spectrum);
    }
    if (uv_mean->parsed()) return RunUvMean(input, lo, hi, sigma2, rho, t, beta, seed);
    if (uv_var->parsed()) return RunUvVar(input, lo, hi, rho, t, beta, seed, mean_known);
    if (experiment->parsed()) {
      ec.experiment = experiment_name;
      ec.d = d;
      ec.n = n;
      ec.n_sweep = n_sweep;
      ec.rho = rho;
      ec.rho_sweep = rho_sweep;
      ec.radius = radius;
      ec.r_sweep = r_sweep;
      ec.kappa = kappa;
      ec.kappa_sweep = kappa_sweep;
      if (!t_list.empty()) ec.t_list = t_list;
      ec.beta = beta;
      ec.trials = trials;
      ec.trim = trim;
      ec.seed = seed;
      ec.dist = dist == "laplace"     ? DistKind::kLaplace
                : dist == "student-t" ? DistKind::kStudentT3
                                      : DistKind::kGaussian;
      ec.cov_shape = cov_shape == "skewed" ? CovShape::kSkewed : CovShape::kIdentity;
      ec.clip_multiplier = clip;
      ec.shrink = shrink;
      ec.floor_spectrum = floor_spectrum;
      ec.workers = workers;
      const std::vector<ResultRow> rows = RunExperiment(ec);
      if (output.empty()) {
        WriteResultCsv(std::cout, rows);
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error(output + ": cannot open file for writing");
        WriteResultCsv(out, rows);
      }
      return 0;
    }
    if (pca->parsed()) {
      return RunPca(input, output, projected_out, scale, kappa, rho, t, k, beta, seed,
                    compare_nonprivate, noiseless, shrink, clip, floor_spectrum);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
