// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// qcorr-lab <experiment> [--config <path>] [--key value ...]
//
// Exit codes: 0 success, 2 validation failure, 3 fixture mismatch,
// 1 anything else.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcorr/lab.hpp"

namespace {

using namespace qcorr;
using namespace qcorr::lab;

constexpr int kExitValidation = 2;
constexpr int kExitFixtureMismatch = 3;

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian:
    case ErrorCode::NotPositive:
    case ErrorCode::TraceNotOne:
    case ErrorCode::InvalidStateInSweep:
    case ErrorCode::InvalidConfig:
    case ErrorCode::NotThermalInitial:
      return true;
    default:
      return false;
  }
}

void report_files(const std::vector<std::filesystem::path>& files) {
  for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
}

int run(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::Example1: {
      const Example1Result r = run_example1(cfg);
      report_files(write_outputs(r, cfg));
      std::cout << "argmin_x = " << format_number(r.argmin_x)
                << ", max |chi_norm2 - sqrt(0.02)| = " << format_number(r.max_chi_deviation) << '\n';
      // 1e-9 absorbs the binary representation of the grid point.
      const bool ok = std::abs(r.argmin_x - 0.64) <= 0.005 + 1e-9 && r.max_chi_deviation <= 1e-12;
      return ok ? 0 : kExitFixtureMismatch;
    }
    case Experiment::Example2: {
      const Example2Result r = run_example2(cfg);
      report_files(write_outputs(r, cfg));
      std::cout << r.intervals.size() << " discrepancy intervals, "
                << r.reference_match.matched_count << "/" << r.reference_match.matched.size()
                << " reference intervals matched\n";
      const bool ok = r.highlighted_match.all_matched() && r.reference_match.matched_count >= 20;
      return ok ? 0 : kExitFixtureMismatch;
    }
    case Experiment::Thermal: {
      const ThermalResult r = run_thermal(cfg);
      report_files(write_outputs(r, cfg));
      std::cout << "max heat residual = " << format_number(r.max_heat_residual)
                << ", identity residual = " << format_number(r.integrated_identity_residual)
                << ", max qmi = " << format_number(r.max_qmi)
                << ", bound = " << format_number(r.bound) << '\n';
      const bool ok = r.bound_held && r.max_heat_residual <= kHeatResidualTolerance &&
                      r.integrated_identity_residual <= kIntegratedIdentityTolerance;
      return ok ? 0 : kExitFixtureMismatch;
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-measure experiments for bipartite quantum states"};
  std::string experiment;
  std::optional<std::string> config_path;
  app.add_option("experiment", experiment, "example1 | example2 | thermal")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "thermal"}));
  app.add_option("--config", config_path, "flat key=value configuration file");

  std::map<std::string, std::optional<std::string>> overrides;
  for (const auto& key : config_keys()) {
    if (key == "experiment") continue;
    app.add_option("--" + key, overrides[key], "override '" + key + "'");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg = ExperimentConfig::defaults_for(parse_experiment(experiment));
    if (config_path) load_config_file(*config_path, cfg);
    for (const auto& [key, value] : overrides)
      if (value) cfg.set(key, *value);
    cfg.validate();
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
