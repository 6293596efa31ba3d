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

#include "uncrel/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace uncrel {

namespace {

using nlohmann::json;

struct Callable {
  std::string name;
  std::vector<double> args;
};

Callable parse_callable(const std::string& text, const std::string& field) {
  const auto open = text.find('(');
  if (open == std::string::npos) {
    return Callable{text, {}};
  }
  if (text.back() != ')') {
    throw ScenarioError(field + ": malformed builtin '" + text + "' (missing ')')");
  }
  Callable call{text.substr(0, open), {}};
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::stringstream stream(inner);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
        ++used;
      }
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      call.args.push_back(value);
    } catch (const std::exception&) {
      throw ScenarioError(field + ": cannot parse argument '" + token + "' in '" + text + "'");
    }
  }
  return call;
}

void require_args(const Callable& call, std::size_t n, const std::string& field) {
  if (call.args.size() != n) {
    throw ScenarioError(field + ": builtin '" + call.name + "' expects " + std::to_string(n) +
                        " argument(s), got " + std::to_string(call.args.size()));
  }
}

Complex parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ScenarioError(field + ": complex entries must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix parse_matrix(const json& j, int expected_dim, const std::string& field) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(expected_dim)) {
    throw ScenarioError(field + ": expected a " + std::to_string(expected_dim) + "x" +
                        std::to_string(expected_dim) + " matrix");
  }
  Matrix m(expected_dim, expected_dim);
  for (int i = 0; i < expected_dim; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(expected_dim)) {
      throw ScenarioError(field + ": row " + std::to_string(i) + " must have " +
                          std::to_string(expected_dim) + " entries");
    }
    for (int k = 0; k < expected_dim; ++k) {
      m(i, k) = parse_complex(row[k], field);
    }
  }
  return m;
}

Vector parse_amplitudes(const json& j, int expected_dim, const std::string& field) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(expected_dim)) {
    throw ScenarioError(field + ": expected " + std::to_string(expected_dim) +
                        " amplitude entries");
  }
  Vector v(expected_dim);
  for (int i = 0; i < expected_dim; ++i) {
    v[i] = parse_complex(j[i], field);
  }
  return v;
}

Operator parse_observable(const json& j, int expected_dim, const std::string& field) {
  if (j.is_string()) {
    const Callable call = parse_callable(j.get<std::string>(), field);
    const auto require_qubit = [&] {
      if (expected_dim != 2) {
        throw ScenarioError(field + ": builtin '" + call.name +
                            "' requires dimension 2, scenario declares " +
                            std::to_string(expected_dim));
      }
    };
    if (call.name == "pauli_x") {
      require_args(call, 0, field);
      require_qubit();
      return pauli_x();
    }
    if (call.name == "pauli_y") {
      require_args(call, 0, field);
      require_qubit();
      return pauli_y();
    }
    if (call.name == "pauli_z") {
      require_args(call, 0, field);
      require_qubit();
      return pauli_z();
    }
    if (call.name == "spin") {
      require_args(call, 2, field);
      require_qubit();
      return spin_observable(call.args[0], call.args[1]);
    }
    throw ScenarioError(field + ": unknown observable builtin '" + call.name +
                        "' (expected pauli_x, pauli_y, pauli_z or spin(theta,phi))");
  }
  try {
    return Operator::observable(parse_matrix(j, expected_dim, field));
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(field + ": " + error.what());
  }
}

Operator parse_unitary(const json& j, int dim_system, int dim_apparatus,
                       const std::string& field) {
  const int joint = dim_system * dim_apparatus;
  if (j.is_string()) {
    const Callable call = parse_callable(j.get<std::string>(), field);
    const auto require_two_qubit = [&] {
      if (dim_system != 2 || dim_apparatus != 2) {
        throw ScenarioError(field + ": builtin '" + call.name +
                            "' requires dim_system = dim_apparatus = 2");
      }
    };
    if (call.name == "identity") {
      require_args(call, 0, field);
      return Operator::unitary(Matrix::Identity(joint, joint));
    }
    if (call.name == "cnot") {
      require_args(call, 2, field);
      require_two_qubit();
      return builtin_cnot_model(call.args[0], call.args[1]).interaction();
    }
    if (call.name == "partial") {
      require_args(call, 3, field);
      require_two_qubit();
      try {
        return builtin_partial_model(call.args[0], call.args[1], call.args[2]).interaction();
      } catch (const std::invalid_argument& error) {
        throw ScenarioError(field + ": " + error.what());
      }
    }
    throw ScenarioError(field + ": unknown unitary builtin '" + call.name +
                        "' (expected identity, cnot(theta,phi) or partial(lambda,theta,phi))");
  }
  try {
    return Operator::unitary(parse_matrix(j, joint, field));
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(field + ": " + error.what());
  }
}

QuantumState parse_state(const json& j, int expected_dim, const std::string& field) {
  if (j.is_string()) {
    const Callable call = parse_callable(j.get<std::string>(), field);
    if (call.name == "basis") {
      require_args(call, 1, field);
      const double raw = call.args[0];
      const int index = static_cast<int>(raw);
      if (raw != static_cast<double>(index) || index < 0 || index >= expected_dim) {
        throw ScenarioError(field + ": basis index must be an integer in [0, " +
                            std::to_string(expected_dim - 1) + "]");
      }
      return QuantumState::basis(expected_dim, index);
    }
    if (call.name == "bloch") {
      require_args(call, 2, field);
      if (expected_dim != 2) {
        throw ScenarioError(field + ": builtin 'bloch' requires dimension 2");
      }
      return bloch_state(call.args[0], call.args[1]);
    }
    throw ScenarioError(field + ": unknown state builtin '" + call.name +
                        "' (expected basis(k) or bloch(theta,phi))");
  }
  try {
    return QuantumState(parse_amplitudes(j, expected_dim, field));
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(field + ": " + error.what());
  }
}

int parse_dim(const json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    throw ScenarioError(field + ": required positive integer");
  }
  const int dim = doc[field].get<int>();
  if (dim < 1) {
    throw ScenarioError(field + ": must be positive, got " + std::to_string(dim));
  }
  return dim;
}

const json& require_field(const json& doc, const std::string& field) {
  if (!doc.contains(field)) {
    throw ScenarioError(field + ": required field missing");
  }
  return doc[field];
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(complex_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_json(v[i]));
  }
  return out;
}

std::string sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::vector<double> grid_values(const SweepParameter& parameter) {
  std::vector<double> values;
  values.reserve(parameter.steps);
  if (parameter.steps == 1) {
    values.push_back(parameter.min);
    return values;
  }
  for (int k = 0; k < parameter.steps; ++k) {
    values.push_back(parameter.min +
                     (parameter.max - parameter.min) * k / (parameter.steps - 1));
  }
  return values;
}

}  // namespace

ScenarioSpec parse_scenario(const json& doc) {
  if (!doc.is_object()) {
    throw ScenarioError("scenario: top-level JSON object required");
  }
  ScenarioSpec spec;
  spec.dim_system = parse_dim(doc, "dim_system");
  spec.dim_apparatus = parse_dim(doc, "dim_apparatus");
  spec.a_spec = require_field(doc, "a_spec");
  spec.b_spec = require_field(doc, "b_spec");
  spec.meter_spec = require_field(doc, "meter_spec");
  spec.unitary_spec = require_field(doc, "unitary_spec");
  spec.system_state = require_field(doc, "system_state");
  spec.apparatus_state = require_field(doc, "apparatus_state");
  return spec;
}

ScenarioSpec load_scenario_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw ScenarioError("cannot open scenario file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& error) {
    throw ScenarioError("scenario file '" + path + "': " + error.what());
  }
  return parse_scenario(doc);
}

Scenario realize(const ScenarioSpec& spec) {
  if (spec.dim_system < 1 || spec.dim_apparatus < 1) {
    throw ScenarioError("dim_system/dim_apparatus: must be positive");
  }
  Operator a = parse_observable(spec.a_spec, spec.dim_system, "a_spec");
  Operator b = parse_observable(spec.b_spec, spec.dim_system, "b_spec");
  Operator meter = parse_observable(spec.meter_spec, spec.dim_apparatus, "meter_spec");
  Operator interaction =
      parse_unitary(spec.unitary_spec, spec.dim_system, spec.dim_apparatus, "unitary_spec");
  QuantumState system = parse_state(spec.system_state, spec.dim_system, "system_state");
  QuantumState apparatus =
      parse_state(spec.apparatus_state, spec.dim_apparatus, "apparatus_state");
  try {
    MeasurementModel model(spec.dim_system, spec.dim_apparatus, std::move(apparatus),
                           std::move(interaction), std::move(meter));
    return Scenario{std::move(model), std::move(a), std::move(b), std::move(system)};
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(std::string("scenario: ") + error.what());
  }
}

ScenarioSpec to_scenario_spec(const Scenario& scenario) {
  ScenarioSpec spec;
  spec.dim_system = scenario.model.dim_system();
  spec.dim_apparatus = scenario.model.dim_apparatus();
  spec.a_spec = matrix_json(scenario.a.entries());
  spec.b_spec = matrix_json(scenario.b.entries());
  spec.meter_spec = matrix_json(scenario.model.meter().entries());
  spec.unitary_spec = matrix_json(scenario.model.interaction().entries());
  spec.system_state = vector_json(scenario.system.amplitudes());
  spec.apparatus_state = vector_json(scenario.model.apparatus_state().amplitudes());
  return spec;
}

json to_json(const ScenarioSpec& spec) {
  return json{{"dim_system", spec.dim_system},
              {"dim_apparatus", spec.dim_apparatus},
              {"a_spec", spec.a_spec},
              {"b_spec", spec.b_spec},
              {"meter_spec", spec.meter_spec},
              {"unitary_spec", spec.unitary_spec},
              {"system_state", spec.system_state},
              {"apparatus_state", spec.apparatus_state}};
}

json report_json(const RelationReport& report) {
  json relations = json::array();
  for (const RelationEntry& entry : report.relations) {
    relations.push_back(json{{"name", entry.name},
                             {"lhs", entry.lhs},
                             {"rhs", entry.rhs},
                             {"slack", entry.slack},
                             {"holds", entry.holds},
                             {"asserted", entry.asserted}});
  }
  return json{{"epsilon", report.epsilon},
              {"eta", report.eta},
              {"sigma_a", report.sigma_a},
              {"sigma_b", report.sigma_b},
              {"bar_epsilon", report.bar_epsilon},
              {"bar_eta", report.bar_eta},
              {"sigma_m_out", report.sigma_m_out},
              {"sigma_b_out", report.sigma_b_out},
              {"commutator_bound", report.commutator_bound},
              {"out_commutator_bound", report.out_commutator_bound},
              {"relations", std::move(relations)}};
}

json fuzz_summary_json(const FuzzSummary& summary) {
  json failures = json::array();
  for (const FuzzFailure& failure : summary.failures) {
    failures.push_back(json{{"relation", failure.relation},
                            {"dim_system", failure.dim_system},
                            {"dim_apparatus", failure.dim_apparatus},
                            {"scenario_index", failure.scenario_index},
                            {"derived_seed", failure.derived_seed},
                            {"slack", failure.slack},
                            {"reverified_slack", failure.reverified_slack}});
  }
  return json{{"scenarios_run", summary.scenarios_run},
              {"min_slack_per_relation", summary.min_slack_per_relation},
              {"worst_case_seeds", summary.worst_case_seeds},
              {"failures", std::move(failures)}};
}

json search_result_json(const SearchResult& result) {
  return json{{"best_parameters", result.best_parameters},
              {"objective_value", result.objective_value},
              {"evaluations", result.evaluations},
              {"seed", result.seed},
              {"best_report", report_json(result.best_report)}};
}

SweepConfig parse_sweep_config(const json& doc) {
  if (!doc.is_object()) {
    throw ScenarioError("sweep: top-level JSON object required");
  }
  SweepConfig config;
  if (!doc.contains("family") || !doc["family"].is_string()) {
    throw ScenarioError("family: required string field");
  }
  config.family = doc["family"].get<std::string>();
  if (!doc.contains("sweep") || !doc["sweep"].is_array()) {
    throw ScenarioError("sweep: required array of swept parameters");
  }
  for (const json& item : doc["sweep"]) {
    if (!item.is_object() || !item.contains("name") || !item.contains("min") ||
        !item.contains("max") || !item.contains("steps")) {
      throw ScenarioError("sweep: each entry needs name, min, max, steps");
    }
    config.swept.push_back(SweepParameter{item["name"].get<std::string>(),
                                          item["min"].get<double>(), item["max"].get<double>(),
                                          item["steps"].get<int>()});
  }
  if (doc.contains("fixed")) {
    if (!doc["fixed"].is_object()) {
      throw ScenarioError("fixed: must be an object of parameter values");
    }
    for (const auto& [key, value] : doc["fixed"].items()) {
      if (!value.is_number()) {
        throw ScenarioError("fixed." + key + ": must be a number");
      }
      config.fixed[key] = value.get<double>();
    }
  }
  return config;
}

SweepConfig load_sweep_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw ScenarioError("cannot open sweep config '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& error) {
    throw ScenarioError("sweep config '" + path + "': " + error.what());
  }
  return parse_sweep_config(doc);
}

void write_sweep_csv(const SweepConfig& config, std::ostream& out) {
  if (config.family != "qubit") {
    throw ScenarioError("family: unknown family '" + config.family + "' (expected 'qubit')");
  }
  const ScenarioFamily family = qubit_family();

  if (config.swept.empty() || config.swept.size() > 2) {
    throw ScenarioError("sweep: exactly one or two swept parameters required");
  }
  std::set<std::string> family_names(family.parameter_names.begin(),
                                     family.parameter_names.end());
  std::set<std::string> covered;
  for (const SweepParameter& parameter : config.swept) {
    if (!family_names.count(parameter.name)) {
      throw ScenarioError("sweep: unknown parameter '" + parameter.name + "'");
    }
    if (!covered.insert(parameter.name).second) {
      throw ScenarioError("sweep: parameter '" + parameter.name + "' listed twice");
    }
    if (parameter.steps < 1) {
      throw ScenarioError("sweep: empty grid, parameter '" + parameter.name +
                          "' has steps < 1");
    }
  }
  for (const auto& [name, value] : config.fixed) {
    (void)value;
    if (!family_names.count(name)) {
      throw ScenarioError("fixed: unknown parameter '" + name + "'");
    }
    if (covered.count(name)) {
      throw ScenarioError("fixed: parameter '" + name + "' is already swept");
    }
  }
  for (const std::string& name : family.parameter_names) {
    if (!covered.count(name) && !config.fixed.count(name)) {
      throw ScenarioError("sweep: parameter '" + name + "' has no swept range or fixed value");
    }
  }

  out << config.swept[0].name;
  if (config.swept.size() == 2) {
    out << "," << config.swept[1].name;
  }
  out << ",epsilon,eta,sigma_a,sigma_b,bar_epsilon,bar_eta,ozawa_lhs,ozawa_rhs,"
         "fujikawa_lhs,fujikawa_rhs,heisenberg_lhs,heisenberg_rhs\n";

  const auto emit_row = [&](const std::vector<double>& swept_values) {
    std::vector<double> parameters(family.parameter_names.size(), 0.0);
    for (std::size_t j = 0; j < family.parameter_names.size(); ++j) {
      const std::string& name = family.parameter_names[j];
      const auto fixed = config.fixed.find(name);
      if (fixed != config.fixed.end()) {
        parameters[j] = fixed->second;
        continue;
      }
      for (std::size_t k = 0; k < config.swept.size(); ++k) {
        if (config.swept[k].name == name) {
          parameters[j] = swept_values[k];
        }
      }
    }
    const Scenario scenario = family.realize(parameters);
    const RelationReport report =
        evaluate_relations(scenario.model, scenario.a, scenario.b, scenario.system);
    const RelationEntry& ozawa = report.relation(relation_names::ozawa);
    const RelationEntry& fujikawa = report.relation(relation_names::fujikawa);
    const RelationEntry& heisenberg = report.relation(relation_names::heisenberg_naive);

    for (std::size_t k = 0; k < swept_values.size(); ++k) {
      out << (k ? "," : "") << sig12(swept_values[k]);
    }
    out << "," << sig12(report.epsilon) << "," << sig12(report.eta) << ","
        << sig12(report.sigma_a) << "," << sig12(report.sigma_b) << ","
        << sig12(report.bar_epsilon) << "," << sig12(report.bar_eta) << ","
        << sig12(ozawa.lhs) << "," << sig12(ozawa.rhs) << "," << sig12(fujikawa.lhs) << ","
        << sig12(fujikawa.rhs) << "," << sig12(heisenberg.lhs) << "," << sig12(heisenberg.rhs)
        << "\n";
  };

  const std::vector<double> first = grid_values(config.swept[0]);
  if (config.swept.size() == 1) {
    for (double value : first) {
      emit_row({value});
    }
    return;
  }
  const std::vector<double> second = grid_values(config.swept[1]);
  for (double outer : first) {
    for (double inner : second) {
      emit_row({outer, inner});
    }
  }
}

int exit_code_for(const RelationReport& report) {
  for (const RelationEntry& entry : report.relations) {
    if (entry.asserted && !entry.holds) {
      return 2;
    }
  }
  return 0;
}

int exit_code_for(const FuzzSummary& summary) { return summary.failures.empty() ? 0 : 2; }

int exit_code_for(const SearchResult& result) { return exit_code_for(result.best_report); }

}  // namespace uncrel
