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

#include "privest/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "privest/covariance.hpp"
#include "privest/csv.hpp"
#include "privest/linalg.hpp"
#include "privest/mean.hpp"
#include "privest/metrics.hpp"
#include "privest/pca.hpp"
#include "privest/privacy.hpp"

namespace privest {

namespace {

struct Setting {
  int n;
  double rho;
  double r_or_kappa;
};

enum class Kind { kMean, kCov, kPca };

Kind ExperimentKind(const std::string& name) {
  if (name == "mean_vs_n" || name == "mean_vs_R" || name == "mean_vs_rho" ||
      name == "heavy_tails") {
    return Kind::kMean;
  }
  if (name == "cov_vs_n" || name == "cov_vs_kappa" || name == "cov_vs_rho") return Kind::kCov;
  if (name == "pca") return Kind::kPca;
  throw std::invalid_argument("RunExperiment: unknown experiment '" + name + "'");
}

std::vector<Setting> BuildSweep(const ExperimentConfig& c) {
  const double default_prior = 10.0 * std::sqrt(static_cast<double>(c.d));
  const double radius = c.radius > 0.0 ? c.radius : default_prior;
  const double kappa = c.kappa > 0.0 ? c.kappa : default_prior;
  const Kind kind = ExperimentKind(c.experiment);
  const double prior = kind == Kind::kMean ? radius : kappa;

  std::vector<Setting> sweep;
  if (c.experiment == "mean_vs_n" || c.experiment == "heavy_tails" ||
      c.experiment == "cov_vs_n") {
    const std::vector<int> ns = c.n_sweep.empty() ? std::vector<int>{c.n} : c.n_sweep;
    for (int n : ns) sweep.push_back({n, c.rho, prior});
  } else if (c.experiment == "mean_vs_R") {
    const std::vector<double> rs = c.r_sweep.empty() ? std::vector<double>{radius} : c.r_sweep;
    for (double r : rs) sweep.push_back({c.n, c.rho, r});
  } else if (c.experiment == "cov_vs_kappa") {
    const std::vector<double> ks =
        c.kappa_sweep.empty() ? std::vector<double>{kappa} : c.kappa_sweep;
    for (double k : ks) sweep.push_back({c.n, c.rho, k});
  } else if (c.experiment == "mean_vs_rho" || c.experiment == "cov_vs_rho") {
    const std::vector<double> rhos =
        c.rho_sweep.empty() ? std::vector<double>{c.rho} : c.rho_sweep;
    for (double rho : rhos) sweep.push_back({c.n, rho, prior});
  } else {  // pca
    sweep.push_back({c.n, c.rho, kappa});
  }
  if (sweep.empty()) throw std::invalid_argument("RunExperiment: empty sweep");
  return sweep;
}

// Stream index layout: sweep index in the high bits, trial in the middle,
// slot (0 = data, 1 + method for estimators) in the low byte.
std::uint64_t StreamId(std::uint64_t sweep, std::uint64_t trial, std::uint64_t slot) {
  return (sweep << 44) | (trial << 8) | slot;
}

// Per-trial error for each method; methods[0] is the non-private baseline,
// methods[1 + i] corresponds to t_list[i].
struct TrialOutcome {
  std::vector<double> values;
  std::vector<std::string> errors;  // empty string on success
};

TrialOutcome MeanTrial(const ExperimentConfig& c, const Setting& s, std::uint64_t sweep_idx,
                       std::uint64_t trial) {
  TrialOutcome out;
  out.values.resize(1 + c.t_list.size(), std::numeric_limits<double>::quiet_NaN());
  out.errors.resize(1 + c.t_list.size());

  Rng data_rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 0));
  DistributionSpec spec;
  spec.kind = c.dist;
  spec.d = c.d;
  const Eigen::MatrixXd data = Sample(spec, s.n, data_rng);
  const Eigen::VectorXd truth = Eigen::VectorXd::Zero(c.d);

  out.values[0] = L2Error(data.colwise().mean().transpose(), truth);

  for (std::size_t m = 0; m < c.t_list.size(); ++m) {
    try {
      Rng rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 1 + m));
      MeanConfig mc;
      mc.t = c.t_list[m];
      mc.budget = SplitBudget(s.rho, mc.t);
      mc.beta = c.beta;
      mc.clip_multiplier = c.clip_multiplier;
      ConfidenceBall ball{Eigen::VectorXd::Zero(c.d), s.r_or_kappa};
      out.values[1 + m] = L2Error(MvmRec(data, ball, mc, rng).estimate, truth);
    } catch (const std::exception& e) {
      out.errors[1 + m] = e.what();
    }
  }
  return out;
}

TrialOutcome CovTrial(const ExperimentConfig& c, const Setting& s, std::uint64_t sweep_idx,
                      std::uint64_t trial) {
  TrialOutcome out;
  out.values.resize(1 + c.t_list.size(), std::numeric_limits<double>::quiet_NaN());
  out.errors.resize(1 + c.t_list.size());

  Rng data_rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 0));
  Eigen::MatrixXd sigma;
  if (c.cov_shape == CovShape::kSkewed) {
    sigma = SkewedCovariance(c.d, s.r_or_kappa, data_rng);
  } else {
    sigma = Eigen::MatrixXd::Identity(c.d, c.d);
  }
  DistributionSpec spec;
  spec.kind = c.dist;
  spec.d = c.d;
  if (c.cov_shape == CovShape::kSkewed) spec.covariance = sigma;
  const Eigen::MatrixXd data = Sample(spec, s.n, data_rng);

  const Eigen::MatrixXd empirical =
      Symmetrize(data.transpose() * data / static_cast<double>(s.n));
  out.values[0] = MahalanobisCovError(empirical, sigma);

  for (std::size_t m = 0; m < c.t_list.size(); ++m) {
    try {
      Rng rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 1 + m));
      CovConfig cc;
      cc.t = c.t_list[m];
      cc.budget = SplitBudget(s.rho, cc.t);
      cc.beta = c.beta;
      cc.shrink = c.shrink;
      cc.clip_multiplier = c.clip_multiplier;
      cc.floor_spectrum = c.floor_spectrum;
      const Eigen::MatrixXd estimate =
          MvcRec(data, Eigen::MatrixXd::Identity(c.d, c.d), s.r_or_kappa, cc, rng).estimate;
      out.values[1 + m] = MahalanobisCovError(estimate, sigma);
    } catch (const std::exception& e) {
      out.errors[1 + m] = e.what();
    }
  }
  return out;
}

TrialOutcome PcaTrial(const ExperimentConfig& c, const Setting& s, std::uint64_t sweep_idx,
                      std::uint64_t trial) {
  TrialOutcome out;
  out.values.resize(1 + c.t_list.size(), std::numeric_limits<double>::quiet_NaN());
  out.errors.resize(1 + c.t_list.size());

  Rng data_rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 0));
  Eigen::VectorXd eigs(c.d);
  eigs.setConstant(c.pca_bulk_eigenvalue);
  eigs[0] = c.pca_top_eigenvalue;
  if (c.d > 1) eigs[1] = c.pca_second_eigenvalue;
  const Eigen::MatrixXd q = RandomRotation(c.d, data_rng);
  const Eigen::MatrixXd sigma = Symmetrize(q * eigs.asDiagonal() * q.transpose());
  const Eigen::VectorXd truth_top = q.col(0);

  DistributionSpec spec;
  spec.d = c.d;
  spec.covariance = sigma;
  const Eigen::MatrixXd data = Sample(spec, s.n, data_rng);

  const Eigen::MatrixXd empirical =
      Symmetrize(data.transpose() * data / static_cast<double>(s.n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(empirical);
  out.values[0] = EigvecAlignment(es.eigenvectors().col(c.d - 1), truth_top);

  for (std::size_t m = 0; m < c.t_list.size(); ++m) {
    try {
      Rng rng = Rng::ForStream(c.seed, StreamId(sweep_idx, trial, 1 + m));
      PcaConfig pc;
      pc.scale_factor = 1.0;
      pc.kappa = s.r_or_kappa;
      pc.rho = s.rho;
      pc.t = c.t_list[m];
      pc.k = std::min(c.pca_k, c.d);
      pc.beta = c.beta;
      pc.shrink = c.shrink;
      pc.clip_multiplier = c.clip_multiplier;
      pc.floor_spectrum = c.floor_spectrum;
      const PcaResult result = PrivatePca(data, pc, rng);
      out.values[1 + m] = EigvecAlignment(result.components.col(0), truth_top);
    } catch (const std::exception& e) {
      out.errors[1 + m] = e.what();
    }
  }
  return out;
}

}  // namespace

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("RunExperiment: trials must be at least 1");
  if (config.t_list.empty()) throw std::invalid_argument("RunExperiment: t_list must be nonempty");
  const Kind kind = ExperimentKind(config.experiment);
  const std::vector<Setting> sweep = BuildSweep(config);
  const std::size_t num_methods = 1 + config.t_list.size();

  // outcomes[sweep * trials + trial]
  std::vector<TrialOutcome> outcomes(sweep.size() * config.trials);
  std::atomic<std::size_t> next_task{0};
  const int workers = std::max(1, config.workers);
  auto worker = [&] {
    for (;;) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= outcomes.size()) return;
      const std::uint64_t sweep_idx = task / config.trials;
      const std::uint64_t trial = task % config.trials;
      const Setting& s = sweep[sweep_idx];
      switch (kind) {
        case Kind::kMean:
          outcomes[task] = MeanTrial(config, s, sweep_idx, trial);
          break;
        case Kind::kCov:
          outcomes[task] = CovTrial(config, s, sweep_idx, trial);
          break;
        case Kind::kPca:
          outcomes[task] = PcaTrial(config, s, sweep_idx, trial);
          break;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }

  const std::string metric = kind == Kind::kMean   ? "l2"
                             : kind == Kind::kCov ? "mahalanobis"
                                                  : "top1_alignment";
  std::vector<ResultRow> rows;
  for (std::size_t m = 0; m < num_methods; ++m) {
    for (std::size_t s = 0; s < sweep.size(); ++s) {
      ResultRow row;
      row.experiment = config.experiment;
      row.t = m == 0 ? 0 : config.t_list[m - 1];
      row.method = m == 0 ? "nonprivate" : "t=" + std::to_string(row.t);
      row.n = sweep[s].n;
      row.d = config.d;
      row.rho = sweep[s].rho;
      row.r_or_kappa = sweep[s].r_or_kappa;
      row.error_metric = metric;
      row.trials = config.trials;
      row.seed = config.seed;
      row.rho_spent = m == 0 ? 0.0 : sweep[s].rho;

      std::vector<double> values;
      values.reserve(config.trials);
      int failures = 0;
      std::string first_error;
      for (int j = 0; j < config.trials; ++j) {
        const TrialOutcome& outcome = outcomes[s * config.trials + j];
        if (!outcome.errors[m].empty()) {
          ++failures;
          if (first_error.empty()) first_error = outcome.errors[m];
        } else {
          values.push_back(outcome.values[m]);
        }
      }
      if (failures > 0) {
        row.error = std::to_string(failures) + "/" + std::to_string(config.trials) +
                    " trials failed: " + first_error;
        row.error_value = std::numeric_limits<double>::quiet_NaN();
      } else {
        row.error_value = TrimmedMean(values, config.trim);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void WriteResultCsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "experiment,method,t,n,d,rho,r_or_kappa,error_metric,error_value,trials,seed,"
         "rho_spent,error\n";
  for (const ResultRow& row : rows) {
    out << row.experiment << ',' << row.method << ',' << row.t << ',' << row.n << ','
        << row.d << ',' << FormatDouble(row.rho) << ',' << FormatDouble(row.r_or_kappa) << ','
        << row.error_metric << ',' << FormatDouble(row.error_value) << ',' << row.trials << ','
        << row.seed << ',' << FormatDouble(row.rho_spent) << ',' << row.error << '\n';
  }
}

}  // namespace privest
