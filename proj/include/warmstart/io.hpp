/* Copyright 2026 The Warmstart Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef WARMSTART_IO_HPP_
#define WARMSTART_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "warmstart/dataset.hpp"
#include "warmstart/evaluation.hpp"
#include "warmstart/learner.hpp"

namespace warmstart::io {

// Malformed input files (CSV rows, JSON documents, config keys).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reals are written with 17 significant digits so they round-trip exactly.
std::string format_real(double v);

// CSV with header user_id,t,s1..sp,a,r,sn1..snp.
void write_dataset_csv(std::ostream& out, const Dataset& data);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);
Dataset read_dataset_csv(std::istream& in, DatasetKind kind = DatasetKind::kOnline);
Dataset read_dataset_csv(const std::filesystem::path& path, DatasetKind kind = DatasetKind::kOnline);

// Prior study on disk: <dir>/prior.csv plus the sidecar <dir>/prior.json
// {theta_bar: [...], gamma, zeta_c, zeta_a, seed}.
struct PriorSidecar {
  Eigen::VectorXd theta_bar;
  double gamma = 0.0;
  double zeta_c = 0.0;
  double zeta_a = 0.0;
  std::uint64_t seed = 0;
};
void write_prior_study(const std::filesystem::path& dir, const PriorStudy& study, const PriorSidecar& meta);
PriorStudy read_prior_study(const std::filesystem::path& dir, PriorSidecar* meta = nullptr);

nlohmann::json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const nlohmann::json& j, const std::string& what);

// One row per learner update: t,reward,alt_iterations,converged,theta1..,w1..
void write_trace_csv(const std::filesystem::path& path, const std::vector<UpdateEvent>& trace);

// Experiment configuration as a JSON object whose keys mirror ExperimentConfig
// fields (zeta_a and the noise scales flattened to the top level; optimiser
// settings under "actor"). Absent keys keep their defaults; unknown keys are
// rejected by name; syntax errors report line and column.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig read_experiment_config(const std::filesystem::path& path);
nlohmann::json experiment_config_to_json(const ExperimentConfig& config);

// results.csv: gamma,arm,mean,std,n_users,T,T0,seed
void write_results_csv(std::ostream& out, const ResultsTable& table, const ExperimentConfig& config);
nlohmann::json results_to_json(const ResultsTable& table, const ExperimentConfig& config);
std::string format_results_table(const ResultsTable& table);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace warmstart::io

#endif  // WARMSTART_IO_HPP_
