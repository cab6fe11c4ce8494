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

#include <cmath>
#include <sstream>

#include <doctest.h>

using namespace privest;

namespace {

ExperimentConfig SmallMeanConfig() {
  ExperimentConfig config;
  config.experiment = "mean_vs_n";
  config.d = 10;
  config.n_sweep = {500, 1000};
  config.rho = 0.5;
  config.t_list = {1, 2};
  config.trials = 10;
  config.seed = 7;
  return config;
}

const ResultRow* FindRow(const std::vector<ResultRow>& rows, const std::string& method, int n) {
  for (const ResultRow& row : rows) {
    if (row.method == method && row.n == n) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("mean_vs_n produces one row per (method, n)") {
  const std::vector<ResultRow> rows = RunExperiment(SmallMeanConfig());
  // Methods: nonprivate, t=1, t=2; two sweep points.
  CHECK(rows.size() == 6);
  for (const ResultRow& row : rows) {
    CHECK(row.experiment == "mean_vs_n");
    CHECK(row.d == 10);
    CHECK(row.trials == 10);
    CHECK(row.error.empty());
    CHECK(std::isfinite(row.error_value));
    CHECK(row.error_value >= 0.0);
    if (row.method == "nonprivate") {
      CHECK(row.rho_spent == 0.0);
    } else {
      CHECK(row.rho_spent == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  CHECK(FindRow(rows, "nonprivate", 500) != nullptr);
  CHECK(FindRow(rows, "t=2", 1000) != nullptr);
}

TEST_CASE("Identical configs give identical rows; seeds change them") {
  const std::vector<ResultRow> a = RunExperiment(SmallMeanConfig());
  const std::vector<ResultRow> b = RunExperiment(SmallMeanConfig());
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].error_value == b[i].error_value);
  }
  ExperimentConfig other = SmallMeanConfig();
  other.seed = 8;
  const std::vector<ResultRow> c = RunExperiment(other);
  bool any_diff = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].method != "nonprivate" && a[i].error_value != c[i].error_value) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("Worker count does not change the results") {
  ExperimentConfig serial = SmallMeanConfig();
  serial.workers = 1;
  ExperimentConfig parallel = SmallMeanConfig();
  parallel.workers = 8;
  const std::vector<ResultRow> a = RunExperiment(serial);
  const std::vector<ResultRow> b = RunExperiment(parallel);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].method == b[i].method);
    CHECK(a[i].error_value == b[i].error_value);
  }
}

TEST_CASE("mean_vs_R sweeps the prior radius") {
  ExperimentConfig config;
  config.experiment = "mean_vs_R";
  config.d = 10;
  config.n = 800;
  config.r_sweep = {10.0 * std::sqrt(10.0), 1000.0 * std::sqrt(10.0)};
  config.t_list = {5};
  config.trials = 8;
  config.seed = 3;
  const std::vector<ResultRow> rows = RunExperiment(config);
  CHECK(rows.size() == 4);  // (nonprivate, t=5) x 2 radii
  for (const ResultRow& row : rows) {
    CHECK(row.n == 800);
    CHECK(row.error.empty());
  }
  CHECK(rows[0].r_or_kappa == doctest::Approx(10.0 * std::sqrt(10.0)));
}

TEST_CASE("cov_vs_n reports Mahalanobis errors") {
  ExperimentConfig config;
  config.experiment = "cov_vs_n";
  config.d = 6;
  config.n_sweep = {2000};
  config.t_list = {1, 2};
  config.trials = 8;
  config.seed = 11;
  config.clip_multiplier = 0.5;
  config.floor_spectrum = true;
  const std::vector<ResultRow> rows = RunExperiment(config);
  CHECK(rows.size() == 3);
  for (const ResultRow& row : rows) {
    CHECK(row.error_metric == "mahalanobis");
    CHECK(row.error.empty());
    CHECK(std::isfinite(row.error_value));
  }
}

TEST_CASE("Failed trials surface as an error column, not a crash") {
  // Absurdly small budget at tiny n makes the covariance step throw.
  ExperimentConfig config;
  config.experiment = "cov_vs_n";
  config.d = 10;
  config.n_sweep = {20};
  config.rho_sweep = {};
  config.rho = 1e-8;
  config.t_list = {2};
  config.trials = 4;
  config.seed = 5;
  const std::vector<ResultRow> rows = RunExperiment(config);
  bool any_error = false;
  for (const ResultRow& row : rows) {
    if (!row.error.empty()) {
      any_error = true;
      CHECK(std::isnan(row.error_value));
    }
  }
  CHECK(any_error);
}

TEST_CASE("heavy_tails runs all three distributions via dist") {
  for (DistKind kind : {DistKind::kGaussian, DistKind::kLaplace, DistKind::kStudentT3}) {
    ExperimentConfig config;
    config.experiment = "heavy_tails";
    config.d = 10;
    config.n_sweep = {1000};
    config.t_list = {2};
    config.trials = 6;
    config.seed = 21;
    config.dist = kind;
    const std::vector<ResultRow> rows = RunExperiment(config);
    CHECK(rows.size() == 2);
    for (const ResultRow& row : rows) CHECK(row.error.empty());
  }
}

TEST_CASE("pca experiment reports alignments in [0, 1]") {
  ExperimentConfig config;
  config.experiment = "pca";
  config.d = 10;
  config.n = 1500;
  config.kappa = 30.0;
  config.t_list = {1, 3};
  config.trials = 6;
  config.seed = 31;
  config.pca_k = 1;
  config.clip_multiplier = 0.5;
  config.floor_spectrum = true;
  const std::vector<ResultRow> rows = RunExperiment(config);
  REQUIRE(!rows.empty());
  for (const ResultRow& row : rows) {
    CHECK(row.error_metric == "top1_alignment");
    CHECK(row.error.empty());
    CHECK(row.error_value >= 0.0);
    CHECK(row.error_value <= 1.0);
  }
}

TEST_CASE("Unknown experiment name throws") {
  ExperimentConfig config;
  config.experiment = "definitely_not_an_experiment";
  CHECK_THROWS(RunExperiment(config));
}

TEST_CASE("WriteResultCsv emits a header and one line per row") {
  const std::vector<ResultRow> rows = RunExperiment(SmallMeanConfig());
  std::ostringstream out;
  WriteResultCsv(out, rows);
  const std::string text = out.str();
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == static_cast<int>(rows.size()) + 1);
  std::istringstream in2(text);
  std::getline(in2, line);
  CHECK(line ==
        "experiment,method,t,n,d,rho,r_or_kappa,error_metric,error_value,trials,seed,"
        "rho_spent,error");
}
