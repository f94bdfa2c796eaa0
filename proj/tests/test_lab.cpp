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
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcorr/lab.hpp"

using namespace qcorr;
using namespace qcorr::lab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qcorr_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::FormMismatch;  // sentinel, never expected below
}

}  // namespace

TEST_CASE("config: parsing, precedence and errors") {
  CHECK(parse_experiment("example1") == Experiment::Example1);
  CHECK(parse_experiment("example2") == Experiment::Example2);
  CHECK(parse_experiment("thermal") == Experiment::Thermal);
  CHECK(code_of([] { parse_experiment("example3"); }) == ErrorCode::InvalidConfig);

  auto cfg = ExperimentConfig::defaults_for(Experiment::Thermal);
  CHECK(cfg.t_min == 0.0);
  load_config_text("# comment\n\n dt = 1e-3 \nlog_base=two\ncoupling=0.5\n", cfg);
  CHECK(cfg.dt == 1e-3);
  CHECK(cfg.log_base == LogBase::Two);
  CHECK(cfg.coupling == 0.5);
  cfg.set("dt", "2e-3");
  CHECK(cfg.dt == 2e-3);
  CHECK_NOTHROW(cfg.validate());

  CHECK(code_of([&] { cfg.set("nope", "1"); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([&] { cfg.set("dt", "abc"); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([&] { load_config_text("dt 1e-3\n", cfg); }) == ErrorCode::InvalidConfig);
  auto bad = ExperimentConfig::defaults_for(Experiment::Example2);
  bad.dt = -1.0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidConfig);
  bad = ExperimentConfig::defaults_for(Experiment::Example2);
  bad.t_max = bad.t_min - 1.0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidConfig);
  bad = ExperimentConfig::defaults_for(Experiment::Thermal);
  bad.beta = 0.0;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidConfig);

  for (const auto& key : config_keys()) CHECK(!key.empty());
}

TEST_CASE("fixtures: the printed initial state is a state to six digits") {
  const ComplexMatrix rho = fixtures::example2_rho0();
  CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-6);
  CHECK(std::abs(rho.trace().imag()) <= 1e-12);
  CHECK(hermiticity_defect(rho) <= 1e-15);
  CHECK_NOTHROW(make_state(rho, {2, 2}));
  CHECK(fixtures::reference_intervals().size() == 24);
  CHECK(fixtures::highlighted_intervals().size() == 2);
}

TEST_CASE("run_example1: validity, argmin and the fixed correlation norm") {
  const auto cfg = ExperimentConfig::defaults_for(Experiment::Example1);
  const auto r = run_example1(cfg);
  CHECK(r.all_states_valid);
  CHECK(r.rows.size() == 631);
  CHECK(r.max_chi_deviation <= 1e-12);
  CHECK(std::abs(r.argmin_x - 0.640) <= 0.005 + 1e-9);
  for (const auto& row : r.rows) REQUIRE(row.qmi >= -1e-12);

  auto wide = cfg;
  wide.x_min = 0.05;
  wide.x_max = 0.3;
  CHECK(code_of([&] { run_example1(wide); }) == ErrorCode::InvalidStateInSweep);
}

TEST_CASE("run_example1: base-2 output is the natural one divided by ln 2") {
  auto cfg = ExperimentConfig::defaults_for(Experiment::Example1);
  cfg.x_step = 0.01;
  const auto nats = run_example1(cfg);
  cfg.log_base = LogBase::Two;
  const auto bits = run_example1(cfg);
  for (std::size_t k = 0; k < nats.rows.size(); ++k)
    REQUIRE(bits.rows[k].qmi == doctest::Approx(nats.rows[k].qmi / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("outputs are byte-identical across runs") {
  auto cfg = ExperimentConfig::defaults_for(Experiment::Example2);
  cfg.t_max = 4.2;
  cfg.dt = 1e-3;
  const auto a = scratch_dir("repeat_a");
  const auto b = scratch_dir("repeat_b");
  cfg.output_dir = a;
  const auto paths_a = write_outputs(run_example2(cfg), cfg);
  cfg.output_dir = b;
  const auto paths_b = write_outputs(run_example2(cfg), cfg);
  REQUIRE(paths_a.size() == paths_b.size());
  for (std::size_t k = 0; k < paths_a.size(); ++k) {
    CHECK(paths_a[k].filename() == paths_b[k].filename());
    CHECK(slurp(paths_a[k]) == slurp(paths_b[k]));
  }
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST_CASE("run_example2: intervals sit on the grid") {
  auto cfg = ExperimentConfig::defaults_for(Experiment::Example2);
  cfg.t_max = 5.5;
  const auto r = run_example2(cfg);
  REQUIRE(!r.intervals.empty());
  for (const auto& iv : r.intervals) {
    CHECK(iv.t_start == r.trajectory.times[iv.first]);
    CHECK(iv.t_end == r.trajectory.times[iv.last]);
    CHECK(iv.first <= iv.last);
    const double k = (iv.t_start - cfg.t_min) / cfg.dt;
    CHECK(std::abs(k - std::round(k)) <= 1e-6);
  }
}

TEST_CASE("run_thermal without coupling stays uncorrelated") {
  auto cfg = ExperimentConfig::defaults_for(Experiment::Thermal);
  cfg.coupling = 0.0;
  cfg.dt = 1e-3;
  const auto r = run_thermal(cfg);
  CHECK(r.bound == 0.0);
  CHECK(r.bound_held);
  CHECK(r.max_qmi <= 1e-12);
  for (const auto& row : r.rows) REQUIRE(std::abs(row.binding_energy) <= 1e-12);
}

TEST_CASE("run_thermal: ledger and identity at the default grid") {
  const auto r = run_thermal(ExperimentConfig::defaults_for(Experiment::Thermal));
  CHECK(r.max_heat_residual <= kHeatResidualTolerance);
  CHECK(r.integrated_identity_residual <= kIntegratedIdentityTolerance);
  CHECK(r.bound_held);
  CHECK(r.bound == doctest::Approx(15.0));
}

TEST_CASE("match_intervals") {
  const std::vector<fixtures::ReferenceInterval> ref{{1.0, 2.0}, {3.0, 3.5}};
  std::vector<DiscrepancyInterval> found(2);
  found[0].t_start = 1.005;
  found[0].t_end = 1.995;
  found[1].t_start = 3.02;
  found[1].t_end = 3.5;
  const auto rep = match_intervals(found, ref);
  CHECK(rep.matched == std::vector<bool>{true, false});
  CHECK(rep.matched_count == 1);
  CHECK(!rep.all_matched());
  CHECK(match_intervals(found, ref, 0.05).all_matched());
}

TEST_CASE("format_number") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}
