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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "uncrel/scenario.hpp"

namespace {

using uncrel::ScenarioError;

// Exit codes: 0 all asserted relations hold, 1 input error, 2 an asserted
// relation was violated.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

std::vector<std::pair<int, int>> parse_dims(const std::string& text) {
  std::vector<std::pair<int, int>> dims;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto split = token.find('x');
    if (split == std::string::npos) {
      throw ScenarioError("--dims: expected dSxdA entries, got '" + token + "'");
    }
    try {
      dims.emplace_back(std::stoi(token.substr(0, split)), std::stoi(token.substr(split + 1)));
    } catch (const std::exception&) {
      throw ScenarioError("--dims: cannot parse '" + token + "'");
    }
  }
  if (dims.empty()) {
    throw ScenarioError("--dims: at least one dSxdA entry required");
  }
  return dims;
}

int run_check(const std::string& path, bool compact) {
  const uncrel::Scenario scenario = uncrel::realize(uncrel::load_scenario_file(path));
  const uncrel::RelationReport report =
      uncrel::evaluate_relations(scenario.model, scenario.a, scenario.b, scenario.system);
  const nlohmann::json doc = uncrel::report_json(report);
  if (compact) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return uncrel::exit_code_for(report);
}

int run_sweep(const std::string& config_path, const std::string& out_path) {
  const uncrel::SweepConfig config = uncrel::load_sweep_file(config_path);
  std::ofstream out(out_path);
  if (!out) {
    throw ScenarioError("cannot open output file '" + out_path + "'");
  }
  uncrel::write_sweep_csv(config, out);
  return kOk;
}

int run_fuzz(long count, const std::string& dims_text, std::uint64_t seed) {
  const uncrel::FuzzSummary summary =
      uncrel::fuzz_relations(parse_dims(dims_text), count, seed);
  std::cout << uncrel::fuzz_summary_json(summary).dump(2) << "\n";
  return uncrel::exit_code_for(summary);
}

int run_search(const std::string& relation, long budget, std::uint64_t seed) {
  const uncrel::SearchResult result =
      uncrel::search_violation(uncrel::qubit_family(), relation, budget, seed);
  std::cout << uncrel::search_result_json(result).dump(2) << "\n";
  return uncrel::exit_code_for(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "uncrel: finite-dimensional simulator and verifier for measurement "
      "uncertainty relations"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool compact = false;
  CLI::App* check = app.add_subcommand("check", "evaluate one scenario file");
  check->add_option("file", scenario_path, "scenario JSON file")->required();
  check->add_flag("--json", compact, "print compact single-line JSON");

  std::string sweep_path;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep to CSV");
  sweep->add_option("config", sweep_path, "sweep config JSON file")->required();
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  long fuzz_count = 0;
  std::string fuzz_dims = "2x2";
  std::uint64_t fuzz_seed = 0;
  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized check of all relations");
  fuzz->add_option("--count", fuzz_count, "scenarios per dimension pair")->required();
  fuzz->add_option("--dims", fuzz_dims, "comma-separated dSxdA list (default 2x2)");
  fuzz->add_option("--seed", fuzz_seed, "random seed")->required();

  std::string search_relation;
  long search_budget = 0;
  std::uint64_t search_seed = 0;
  CLI::App* search = app.add_subcommand("search", "minimize a relation's slack");
  search->add_option("--relation", search_relation, "relation name")->required();
  search->add_option("--budget", search_budget, "objective evaluation budget")->required();
  search->add_option("--seed", search_seed, "random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) {
      return run_check(scenario_path, compact);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_path, sweep_out);
    }
    if (fuzz->parsed()) {
      return run_fuzz(fuzz_count, fuzz_dims, fuzz_seed);
    }
    if (search->parsed()) {
      return run_search(search_relation, search_budget, search_seed);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
