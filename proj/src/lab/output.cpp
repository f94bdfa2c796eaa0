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
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qcorr/lab.hpp"

namespace qcorr::lab {

namespace {

using nlohmann::json;

std::string_view base_name(LogBase b) { return b == LogBase::Natural ? "natural" : "two"; }

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::filesystem::path prepare(const ExperimentConfig& cfg, std::string_view suffix) {
  std::filesystem::create_directories(cfg.output_dir);
  return cfg.output_dir / (std::string(to_string(cfg.experiment)) + std::string(suffix));
}

void write_json(const std::filesystem::path& path, const json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
      : out_(open_output(path)) {
    bool first = true;
    for (auto h : header) {
      out_ << (first ? "" : ",") << h;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Values>
  void row(Values... values) {
    bool first = true;
    ((out_ << (first ? "" : ",") << format_number(static_cast<double>(values)), first = false), ...);
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::filesystem::path> write_outputs(const Example1Result& r,
                                                 const ExperimentConfig& cfg) {
  const auto csv_path = prepare(cfg, ".csv");
  {
    CsvWriter csv(csv_path, {"x", "qmi", "chi_norm2"});
    for (const auto& row : r.rows) csv.row(row.x, row.qmi, row.chi_norm2);
  }
  const auto summary_path = prepare(cfg, "_summary.json");
  write_json(summary_path, {
                               {"experiment", "example1"},
                               {"log_base", base_name(cfg.log_base)},
                               {"grid_points", r.rows.size()},
                               {"argmin_x", r.argmin_x},
                               {"min_qmi", r.min_qmi},
                               {"max_chi_norm2_deviation", r.max_chi_deviation},
                               {"all_states_valid", r.all_states_valid},
                           });
  return {csv_path, summary_path};
}

std::vector<std::filesystem::path> write_outputs(const Example2Result& r,
                                                 const ExperimentConfig& cfg) {
  const Trajectory& traj = r.trajectory;
  const auto csv_path = prepare(cfg, ".csv");
  {
    CsvWriter csv(csv_path, {"t", "qmi", "chi_norm2", "qmi_rate", "chi_norm2_rate", "sign_product"});
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const int sign = thresholded_sign(traj.qmi_rate[k], cfg.zero_eps) *
                       thresholded_sign(traj.chi_norm2_rate[k], cfg.zero_eps);
      csv.row(traj.times[k], traj.qmi[k], traj.chi_norm[k], traj.qmi_rate[k],
              traj.chi_norm2_rate[k], sign);
    }
  }

  json intervals = json::array();
  for (const auto& iv : r.intervals) intervals.push_back({iv.t_start, iv.t_end});
  json reference = json::array();
  for (const auto& iv : fixtures::reference_intervals()) reference.push_back({iv.t_start, iv.t_end});

  const auto path = prepare(cfg, "_intervals.json");
  write_json(path, {
                       {"experiment", "example2"},
                       {"log_base", base_name(cfg.log_base)},
                       {"t_min", traj.t_min},
                       {"dt", traj.dt},
                       {"grid_points", traj.size()},
                       {"zero_eps", cfg.zero_eps},
                       {"endpoint_tolerance", kIntervalEndpointTolerance},
                       {"intervals", intervals},
                       {"interval_count", r.intervals.size()},
                       {"reference_intervals", reference},
                       {"reference_matched", r.reference_match.matched},
                       {"reference_matched_count", r.reference_match.matched_count},
                       {"highlighted_matched", r.highlighted_match.all_matched()},
                   });
  return {csv_path, path};
}

std::vector<std::filesystem::path> write_outputs(const ThermalResult& r,
                                                 const ExperimentConfig& cfg) {
  const auto csv_path = prepare(cfg, ".csv");
  {
    CsvWriter csv(csv_path, {"t", "qmi", "chi_norm2", "binding_energy", "dq_s", "dq_b", "du_chi",
                             "heat_residual"});
    for (const auto& row : r.rows)
      csv.row(row.t, row.qmi, row.chi_norm2, row.binding_energy, row.ledger.dq_s, row.ledger.dq_b,
              row.ledger.du_chi, row.ledger.residual);
  }
  const auto path = prepare(cfg, "_summary.json");
  write_json(path, {
                       {"experiment", "thermal"},
                       {"log_base", "natural"},
                       {"beta", cfg.beta},
                       {"coupling", cfg.coupling},
                       {"t_min", cfg.t_min},
                       {"t_max", cfg.t_max},
                       {"dt", cfg.dt},
                       {"grid_points", r.rows.size()},
                       {"max_heat_residual", r.max_heat_residual},
                       {"integrated_identity_residual", r.integrated_identity_residual},
                       {"max_qmi", r.max_qmi},
                       {"area_law_bound", r.bound},
                       {"bound_held", r.bound_held},
                   });
  return {csv_path, path};
}

}  // namespace qcorr::lab
