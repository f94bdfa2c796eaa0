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
#include <cmath>
#include <string>

#include "qcorr/lab.hpp"

namespace qcorr::lab {

IntervalMatchReport match_intervals(const std::vector<DiscrepancyInterval>& found,
                                    const std::vector<fixtures::ReferenceInterval>& reference,
                                    double tolerance) {
  IntervalMatchReport report;
  report.matched.assign(reference.size(), false);
  for (std::size_t r = 0; r < reference.size(); ++r) {
    for (const auto& f : found) {
      if (std::abs(f.t_start - reference[r].t_start) <= tolerance &&
          std::abs(f.t_end - reference[r].t_end) <= tolerance) {
        report.matched[r] = true;
        ++report.matched_count;
        break;
      }
    }
  }
  return report;
}

Example1Result run_example1(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(std::floor((cfg.x_max - cfg.x_min) / cfg.x_step + 1e-9)) + 1;
  const double chi_reference = std::sqrt(0.02);

  Example1Result result;
  result.rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = cfg.x_min + static_cast<double>(k) * cfg.x_step;
    const BipartiteState state = [&] {
      try {
        return make_state(fixtures::example1_state(x), {2, 2});
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidStateInSweep,
                    "x = " + format_number(x) + ": " + e.what(), x);
      }
    }();
    const Example1Row row{x, qmi(state, cfg.log_base), chi_norm2(CorrelationMatrix(state))};
    if (k == 0 || row.qmi < result.min_qmi) {
      result.min_qmi = row.qmi;
      result.argmin_x = x;
    }
    result.max_chi_deviation =
        std::max(result.max_chi_deviation, std::abs(row.chi_norm2 - chi_reference));
    result.rows.push_back(row);
  }
  result.all_states_valid = true;
  return result;
}

Example2Result run_example2(const ExperimentConfig& cfg) {
  cfg.validate();
  const BipartiteState state0 = make_state(fixtures::example2_rho0(), {2, 2});
  const HamiltonianDecomposition h = fixtures::example2_hamiltonian(cfg.coupling);

  SweepOptions opts;
  opts.rates.base = cfg.log_base;
  Example2Result result{sweep(state0, h, cfg.t_min, cfg.t_max, cfg.dt, opts), {}, {}, {}};
  result.intervals = discrepancy_scan(result.trajectory, cfg.zero_eps);
  result.reference_match = match_intervals(result.intervals, fixtures::reference_intervals());
  result.highlighted_match = match_intervals(result.intervals, fixtures::highlighted_intervals());
  return result;
}

ThermalResult run_thermal(const ExperimentConfig& cfg) {
  cfg.validate();
  const HamiltonianDecomposition h = fixtures::example2_hamiltonian(cfg.coupling);
  const ThermalReference ref = make_thermal_reference(h.h_s(), h.h_b(), cfg.beta);
  const BipartiteState state0 = make_state(ref.product(), h.dims());

  const Trajectory traj = sweep(state0, h, cfg.t_min, cfg.t_max, cfg.dt);
  const std::vector<HeatLedger> ledger = heat_ledger(traj, h);

  ThermalResult result;
  result.rows.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const HeatLedger entry = k < ledger.size() ? ledger[k] : HeatLedger{traj.times[k]};
    result.rows.push_back({traj.times[k], traj.qmi[k], traj.chi_norm[k],
                           binding_energy(traj.states[k], h), entry});
    result.max_heat_residual = std::max(result.max_heat_residual, std::abs(entry.residual));
    result.max_qmi = std::max(result.max_qmi, traj.qmi[k]);
  }
  result.integrated_identity_residual = integrated_qmi_identity(traj, h, cfg.beta);
  result.bound = area_law_bound(h, cfg.beta);
  result.bound_held = result.max_qmi <= result.bound + kBoundSlack;
  return result;
}

}  // namespace qcorr::lab
