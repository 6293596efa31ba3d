// Copyright 2026 The uncrel authors.
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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "uncrel/search.hpp"

namespace uncrel {

/// Raised for malformed scenario or sweep files; the message names the
/// offending field.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declarative scenario description. Operator and state fields hold either a
/// builtin spec string ("pauli_z", "spin(theta,phi)", "identity",
/// "cnot(theta,phi)", "partial(lambda,theta,phi)", "basis(k)",
/// "bloch(theta,phi)") or an explicit complex matrix/vector with [re, im]
/// entry pairs.
struct ScenarioSpec {
  int dim_system = 0;
  int dim_apparatus = 0;
  nlohmann::json a_spec;
  nlohmann::json b_spec;
  nlohmann::json meter_spec;
  nlohmann::json unitary_spec;
  nlohmann::json system_state;
  nlohmann::json apparatus_state;
};

ScenarioSpec parse_scenario(const nlohmann::json& doc);
ScenarioSpec load_scenario_file(const std::string& path);

/// Builds the concrete scenario; every referenced invariant (hermiticity,
/// unitarity, unit norm, dimensions) is enforced and failures name the
/// field.
Scenario realize(const ScenarioSpec& spec);

/// Serializes a realized scenario back into an explicit-matrix spec. The
/// round trip realize(parse(to_json(to_scenario_spec(s)))) reproduces the
/// scenario's relation report.
ScenarioSpec to_scenario_spec(const Scenario& scenario);

nlohmann::json to_json(const ScenarioSpec& spec);
nlohmann::json report_json(const RelationReport& report);
nlohmann::json fuzz_summary_json(const FuzzSummary& summary);
nlohmann::json search_result_json(const SearchResult& result);

/// One swept parameter: `steps` grid points from min to max inclusive
/// (steps == 1 pins the parameter at min).
struct SweepParameter {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

/// Sweep description: a named family, one or two swept parameters, fixed
/// values for every remaining family parameter.
struct SweepConfig {
  std::string family;
  std::vector<SweepParameter> swept;
  std::map<std::string, double> fixed;
};

SweepConfig parse_sweep_config(const nlohmann::json& doc);
SweepConfig load_sweep_file(const std::string& path);

/// Writes the sweep grid as CSV: the swept parameter columns followed by
/// epsilon,eta,sigma_a,sigma_b,bar_epsilon,bar_eta,ozawa_lhs,ozawa_rhs,
/// fujikawa_lhs,fujikawa_rhs,heisenberg_lhs,heisenberg_rhs, one row per grid
/// point, 12 significant digits.
void write_sweep_csv(const SweepConfig& config, std::ostream& out);

/// Exit-code contract shared by the CLI commands: 0 when every asserted
/// relation holds, 2 otherwise.
int exit_code_for(const RelationReport& report);
int exit_code_for(const FuzzSummary& summary);
int exit_code_for(const SearchResult& result);

}  // namespace uncrel
