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
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "qcorr/lab.hpp"

namespace qcorr::lab {

namespace {

Error invalid(const std::string& msg) { return Error(ErrorCode::InvalidConfig, msg); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw invalid("key '" + std::string(key) + "': not a number: '" + std::string(value) + "'");
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw invalid("key '" + std::string(key) + "': not an unsigned integer: '" +
                  std::string(value) + "'");
  return out;
}

}  // namespace

Experiment parse_experiment(std::string_view name) {
  if (name == "example1") return Experiment::Example1;
  if (name == "example2") return Experiment::Example2;
  if (name == "thermal") return Experiment::Thermal;
  throw invalid("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Example1: return "example1";
    case Experiment::Example2: return "example2";
    case Experiment::Thermal: return "thermal";
  }
  return "unknown";
}

ExperimentConfig ExperimentConfig::defaults_for(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  if (e == Experiment::Thermal) {
    cfg.t_min = 0.0;
    cfg.t_max = 2.0;
  }
  return cfg;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "experiment", "x_min", "x_max",    "x_step",   "t_min",      "t_max", "dt",
      "beta",       "coupling", "log_base", "zero_eps", "output_dir", "seed"};
  return keys;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "experiment") {
    const Experiment e = parse_experiment(value);
    if (e != experiment)
      throw invalid("config names experiment '" + std::string(value) + "' but running '" +
                    std::string(to_string(experiment)) + "'");
  } else if (key == "x_min") {
    x_min = parse_double(key, value);
  } else if (key == "x_max") {
    x_max = parse_double(key, value);
  } else if (key == "x_step") {
    x_step = parse_double(key, value);
  } else if (key == "t_min") {
    t_min = parse_double(key, value);
  } else if (key == "t_max") {
    t_max = parse_double(key, value);
  } else if (key == "dt") {
    dt = parse_double(key, value);
  } else if (key == "beta") {
    beta = parse_double(key, value);
  } else if (key == "coupling") {
    coupling = parse_double(key, value);
  } else if (key == "log_base") {
    if (value == "natural")
      log_base = LogBase::Natural;
    else if (value == "two")
      log_base = LogBase::Two;
    else
      throw invalid("log_base must be 'natural' or 'two', got '" + std::string(value) + "'");
  } else if (key == "zero_eps") {
    zero_eps = parse_double(key, value);
  } else if (key == "output_dir") {
    if (value.empty()) throw invalid("output_dir is empty");
    output_dir = std::filesystem::path(std::string(value));
  } else if (key == "seed") {
    seed = parse_unsigned(key, value);
  } else {
    throw invalid("unknown key '" + std::string(key) + "'");
  }
}

void ExperimentConfig::validate() const {
  if (experiment == Experiment::Example1) {
    if (!(x_step > 0.0)) throw invalid("x_step must be positive");
    if (!(x_max >= x_min)) throw invalid("x_max must not be below x_min");
  } else {
    if (!(dt > 0.0)) throw invalid("dt must be positive");
    if (!(t_max > t_min)) throw invalid("t_max must exceed t_min");
  }
  if (experiment == Experiment::Thermal && !(beta > 0.0)) throw invalid("beta must be positive");
  if (!(zero_eps >= 0.0)) throw invalid("zero_eps must be non-negative");
}

void load_config_text(std::string_view text, ExperimentConfig& cfg) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw invalid("line " + std::to_string(line_no) + ": expected key=value");
    cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void load_config_file(const std::filesystem::path& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw invalid("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  load_config_text(buf.str(), cfg);
}

}  // namespace qcorr::lab
