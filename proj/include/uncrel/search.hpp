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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uncrel/metrics.hpp"

namespace uncrel {

/// A fully specified scenario: measurement model, observable pair, system
/// state.
struct Scenario {
  MeasurementModel model;
  Operator a;
  Operator b;
  QuantumState system;
};

/// Parametrized scenario family over a closed box. realize must produce a
/// valid scenario for every in-bounds parameter vector.
struct ScenarioFamily {
  std::vector<std::string> parameter_names;
  std::vector<std::pair<double, double>> bounds;
  std::function<Scenario(const std::vector<double>&)> realize;
};

/// Result of a violation search. best_report is re-evaluated from
/// best_parameters after the search, so objective_value always reproduces.
struct SearchResult {
  std::vector<double> best_parameters;
  RelationReport best_report;
  double objective_value = 0.0;
  long evaluations = 0;
  std::uint64_t seed = 0;
};

/// A fuzz scenario whose asserted relation came out violated. Verified once
/// more outside the fuzz loop before being reported.
struct FuzzFailure {
  std::string relation;
  int dim_system = 0;
  int dim_apparatus = 0;
  long scenario_index = 0;  // index within its (dim_system, dim_apparatus) block
  std::uint64_t derived_seed = 0;
  double slack = 0.0;
  double reverified_slack = 0.0;
};

/// Aggregate over a fuzz run. failures is empty exactly when every asserted
/// slack stayed at or above tol::slack_floor.
struct FuzzSummary {
  long scenarios_run = 0;
  std::map<std::string, double> min_slack_per_relation;
  std::map<std::string, std::uint64_t> worst_case_seeds;
  std::vector<FuzzFailure> failures;
};

/// Hermitian matrix from the Gaussian ensemble (G + G^dag)/sqrt(2), entries
/// of unit variance.
Operator random_hermitian(int dim, GaussianStream& stream);

/// Scenario with Gaussian-ensemble observables and meter, Haar system and
/// apparatus states, and a Haar interaction unitary, all drawn from one
/// stream seeded with `seed`.
Scenario random_scenario(int dim_system, int dim_apparatus, std::uint64_t seed);

/// The canonical naive-Heisenberg violation witness: exact Z-basis
/// controlled-NOT model, A = Z, B = X, system state the +1 eigenvector of Y.
/// Its error vanishes while the commutator bound is 1, so the naive product
/// relation fails as deeply as a spin pair allows.
Scenario witness_scenario();

/// Runs `count` random scenarios per dimension pair and aggregates slacks.
/// Scenario i of each block uses the derived seed (seed XOR global index),
/// so runs are deterministic and schedule-independent. The first scenario of
/// a (2, 2) block is always the analytic witness, which pins a negative
/// naive-Heisenberg slack into every qubit fuzz run.
FuzzSummary fuzz_relations(const std::vector<std::pair<int, int>>& dims, long count,
                           std::uint64_t seed);

/// Spin-pair family over (theta_a, phi_a, theta_b, phi_b, theta_psi,
/// phi_psi, lambda): A and B spin observables, the system state on the Bloch
/// sphere, and the partial-strength model coupled along the A direction.
ScenarioFamily qubit_family();

/// Minimizes the named relation's slack over the family box with budgeted
/// multi-start Nelder-Mead (max(1, budget/200) restarts, box projection on
/// every proposal). Deterministic for a fixed (family, budget, seed).
SearchResult search_violation(const ScenarioFamily& family, const std::string& relation_name,
                              long budget, std::uint64_t seed);

}  // namespace uncrel
