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
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/thermo.hpp"

namespace qcorr::lab {

enum class Experiment { Example1, Example2, Thermal };

Experiment parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);

struct ExperimentConfig {
  Experiment experiment = Experiment::Example1;
  double x_min = 0.27;
  double x_max = 0.9;
  double x_step = 0.001;
  double t_min = 4.0;
  double t_max = 8.0;
  double dt = 4e-5;
  double beta = 1.0;
  double coupling = 1.0;  // scales H_I
  LogBase log_base = LogBase::Natural;
  double zero_eps = kDefaultZeroEps;
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 20260101;

  /// Defaults for each experiment; thermal runs start at t = 0.
  static ExperimentConfig defaults_for(Experiment e);

  /// Assigns one key. Throws Error(InvalidConfig) for unknown keys or
  /// unparsable values.
  void set(std::string_view key, std::string_view value);

  /// Throws Error(InvalidConfig) describing the first violated constraint.
  void validate() const;
};

/// Every key accepted by ExperimentConfig::set.
const std::vector<std::string>& config_keys();

/// Applies a flat key=value file on top of cfg. Blank lines and lines
/// starting with '#' are ignored.
void load_config_file(const std::filesystem::path& path, ExperimentConfig& cfg);
void load_config_text(std::string_view text, ExperimentConfig& cfg);

namespace fixtures {

/// (|1,0><0,1| + |0,1><1,0|) / 10
ComplexMatrix example1_chi();
ComplexMatrix example1_rho_s(double x);
ComplexMatrix example1_rho_b(double x);
/// rho_S(x) (x) rho_B(x) + chi, unvalidated.
ComplexMatrix example1_state(double x);

/// The printed six-digit initial state of the two-qubit run.
ComplexMatrix example2_rho0();
HamiltonianDecomposition example2_hamiltonian(double coupling = 1.0);

struct ReferenceInterval {
  double t_start;
  double t_end;
};

/// The 24 published discrepancy intervals on t in [4, 8], dt = 4e-5.
const std::vector<ReferenceInterval>& reference_intervals();
/// The two intervals singled out in the plotted trajectory.
const std::vector<ReferenceInterval>& highlighted_intervals();

}  // namespace fixtures

inline constexpr double kIntervalEndpointTolerance = 0.01;

struct IntervalMatchReport {
  std::vector<bool> matched;  // per reference interval
  std::size_t matched_count = 0;
  bool all_matched() const { return matched_count == matched.size(); }
};

IntervalMatchReport match_intervals(const std::vector<DiscrepancyInterval>& found,
                                    const std::vector<fixtures::ReferenceInterval>& reference,
                                    double tolerance = kIntervalEndpointTolerance);

struct Example1Row {
  double x;
  double qmi;
  double chi_norm2;
};

struct Example1Result {
  std::vector<Example1Row> rows;
  double argmin_x = 0.0;
  double min_qmi = 0.0;
  double max_chi_deviation = 0.0;  // max |chi_norm2 - sqrt(0.02)|
  bool all_states_valid = false;
};

/// Throws Error(InvalidStateInSweep) naming the offending x.
Example1Result run_example1(const ExperimentConfig& cfg);

struct Example2Result {
  Trajectory trajectory;
  std::vector<DiscrepancyInterval> intervals;
  IntervalMatchReport reference_match;
  IntervalMatchReport highlighted_match;
};

Example2Result run_example2(const ExperimentConfig& cfg);

struct ThermalRow {
  double t;
  double qmi;
  double chi_norm2;
  double binding_energy;
  HeatLedger ledger;
};

struct ThermalResult {
  std::vector<ThermalRow> rows;
  double max_heat_residual = 0.0;
  double integrated_identity_residual = 0.0;
  double max_qmi = 0.0;
  double bound = 0.0;
  bool bound_held = false;
};

inline constexpr double kHeatResidualTolerance = 1e-8;
inline constexpr double kIntegratedIdentityTolerance = 1e-7;
inline constexpr double kBoundSlack = 1e-9;

/// Starts from the thermal product of H_S, H_B at cfg.beta. QMI here is
/// always in nats.
ThermalResult run_thermal(const ExperimentConfig& cfg);

/// Writers return the paths they created.
std::vector<std::filesystem::path> write_outputs(const Example1Result& r, const ExperimentConfig& cfg);
std::vector<std::filesystem::path> write_outputs(const Example2Result& r, const ExperimentConfig& cfg);
std::vector<std::filesystem::path> write_outputs(const ThermalResult& r, const ExperimentConfig& cfg);

/// "%.12g"
std::string format_number(double v);

}  // namespace qcorr::lab
