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

#include "uncrel/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uncrel {

namespace {

constexpr std::uint64_t kRestartSalt = 0x9e3779b97f4a7c15ull;

bool witness_slot(int dim_system, int dim_apparatus, long index) {
  return dim_system == 2 && dim_apparatus == 2 && index == 0;
}

Scenario fuzz_scenario(int dim_system, int dim_apparatus, long index, std::uint64_t derived_seed) {
  if (witness_slot(dim_system, dim_apparatus, index)) {
    return witness_scenario();
  }
  return random_scenario(dim_system, dim_apparatus, derived_seed);
}

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

std::vector<double> clamp_to_box(std::vector<double> x,
                                 const std::vector<std::pair<double, double>>& bounds) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = clamp(x[i], bounds[i].first, bounds[i].second);
  }
  return x;
}

// One Nelder-Mead run from a seeded start point. Every proposal is clamped
// into the box before evaluation; `evaluate` enforces the budget by
// returning false once it is exhausted.
void nelder_mead(const std::function<bool(const std::vector<double>&, double&)>& evaluate,
                 const std::vector<double>& start,
                 const std::vector<std::pair<double, double>>& bounds) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex;
  std::vector<double> values;

  const auto push_vertex = [&](std::vector<double> vertex) {
    vertex = clamp_to_box(std::move(vertex), bounds);
    double value = 0.0;
    if (!evaluate(vertex, value)) {
      return false;
    }
    simplex.push_back(std::move(vertex));
    values.push_back(value);
    return true;
  };

  if (!push_vertex(start)) {
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> vertex = start;
    const double span = bounds[j].second - bounds[j].first;
    double step = 0.1 * span;
    if (vertex[j] + step > bounds[j].second) {
      step = -step;
    }
    vertex[j] += step;
    if (!push_vertex(std::move(vertex))) {
      return;
    }
  }

  const auto order = [&] {
    std::vector<std::size_t> idx(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> v2;
    for (std::size_t i : idx) {
      s2.push_back(simplex[i]);
      v2.push_back(values[i]);
    }
    simplex.swap(s2);
    values.swap(v2);
  };

  while (true) {
    order();
    // Collapsed simplex: no progress left at double precision.
    double spread = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      spread = std::max(spread, std::abs(simplex.back()[j] - simplex.front()[j]));
    }
    if (spread < 1e-12) {
      return;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        centroid[j] += simplex[i][j];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(n);
    }

    const auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = centroid[j] + coeff * (centroid[j] - simplex.back()[j]);
      }
      return clamp_to_box(std::move(x), bounds);
    };

    const std::vector<double> reflected = blend(1.0);
    double reflected_value = 0.0;
    if (!evaluate(reflected, reflected_value)) {
      return;
    }

    if (reflected_value < values.front()) {
      const std::vector<double> expanded = blend(2.0);
      double expanded_value = 0.0;
      if (!evaluate(expanded, expanded_value)) {
        return;
      }
      if (expanded_value < reflected_value) {
        simplex.back() = expanded;
        values.back() = expanded_value;
      } else {
        simplex.back() = reflected;
        values.back() = reflected_value;
      }
      continue;
    }
    if (reflected_value < values[values.size() - 2]) {
      simplex.back() = reflected;
      values.back() = reflected_value;
      continue;
    }

    const bool outside = reflected_value < values.back();
    const std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
    double contracted_value = 0.0;
    if (!evaluate(contracted, contracted_value)) {
      return;
    }
    if (contracted_value < (outside ? reflected_value : values.back())) {
      simplex.back() = contracted;
      values.back() = contracted_value;
      continue;
    }

    // Shrink toward the best vertex.
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex.front()[j] + 0.5 * (simplex[i][j] - simplex.front()[j]);
      }
      simplex[i] = clamp_to_box(std::move(simplex[i]), bounds);
      if (!evaluate(simplex[i], values[i])) {
        return;
      }
    }
  }
}

}  // namespace

Operator random_hermitian(int dim, GaussianStream& stream) {
  if (dim < 1) {
    throw std::invalid_argument("random_hermitian: dimension must be positive");
  }
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = stream.complex_normal();
    }
  }
  return Operator::observable((g + g.adjoint().eval()) / std::numbers::sqrt2);
}

Scenario random_scenario(int dim_system, int dim_apparatus, std::uint64_t seed) {
  if (dim_system < 2 || dim_apparatus < 2) {
    throw std::invalid_argument("random_scenario: dimensions must be at least 2");
  }
  GaussianStream stream(seed);
  Operator a = random_hermitian(dim_system, stream);
  Operator b = random_hermitian(dim_system, stream);
  QuantumState system = haar_random_state(dim_system, stream);
  QuantumState apparatus = haar_random_state(dim_apparatus, stream);
  Operator interaction = random_unitary(dim_system * dim_apparatus, stream);
  Operator meter = random_hermitian(dim_apparatus, stream);
  MeasurementModel model(dim_system, dim_apparatus, std::move(apparatus), std::move(interaction),
                         std::move(meter));
  return Scenario{std::move(model), std::move(a), std::move(b), std::move(system)};
}

Scenario witness_scenario() {
  return Scenario{builtin_cnot_model(0.0, 0.0), pauli_z(), pauli_x(),
                  bloch_state(std::numbers::pi / 2, std::numbers::pi / 2)};
}

FuzzSummary fuzz_relations(const std::vector<std::pair<int, int>>& dims, long count,
                           std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("fuzz_relations: count must be at least 1");
  }
  if (dims.empty()) {
    throw std::invalid_argument("fuzz_relations: at least one dimension pair required");
  }
  for (const auto& [ds, da] : dims) {
    if (ds < 2 || da < 2) {
      throw std::invalid_argument("fuzz_relations: dimensions must be at least 2, got " +
                                  std::to_string(ds) + "x" + std::to_string(da));
    }
  }

  FuzzSummary summary;
  std::uint64_t global_index = 0;
  for (const auto& [ds, da] : dims) {
    for (long i = 0; i < count; ++i, ++global_index) {
      const std::uint64_t derived = seed ^ global_index;
      const Scenario scenario = fuzz_scenario(ds, da, i, derived);
      const RelationReport report =
          evaluate_relations(scenario.model, scenario.a, scenario.b, scenario.system);
      ++summary.scenarios_run;
      for (const RelationEntry& entry : report.relations) {
        auto it = summary.min_slack_per_relation.find(entry.name);
        if (it == summary.min_slack_per_relation.end() || entry.slack < it->second) {
          summary.min_slack_per_relation[entry.name] = entry.slack;
          summary.worst_case_seeds[entry.name] = derived;
        }
        if (entry.asserted && entry.slack < tol::slack_floor) {
          summary.failures.push_back(
              FuzzFailure{entry.name, ds, da, i, derived, entry.slack, 0.0});
        }
      }
    }
  }

  // Re-verify every candidate failure outside the fuzz loop; a violation
  // that does not reproduce is an integrity error, not a finding.
  for (FuzzFailure& failure : summary.failures) {
    const Scenario scenario = fuzz_scenario(failure.dim_system, failure.dim_apparatus,
                                            failure.scenario_index, failure.derived_seed);
    const RelationReport report =
        evaluate_relations(scenario.model, scenario.a, scenario.b, scenario.system);
    failure.reverified_slack = report.relation(failure.relation).slack;
    if (failure.reverified_slack >= tol::slack_floor) {
      throw std::runtime_error("fuzz_relations: violation of '" + failure.relation +
                               "' did not reproduce on re-evaluation");
    }
  }
  return summary;
}

ScenarioFamily qubit_family() {
  ScenarioFamily family;
  family.parameter_names = {"theta_a", "phi_a",     "theta_b", "phi_b",
                            "theta_psi", "phi_psi", "lambda"};
  const double two_pi = 2.0 * std::numbers::pi;
  family.bounds = {{0.0, two_pi}, {0.0, two_pi}, {0.0, two_pi}, {0.0, two_pi},
                   {0.0, two_pi}, {0.0, two_pi}, {0.0, 1.0}};
  family.realize = [](const std::vector<double>& p) {
    if (p.size() != 7) {
      throw std::invalid_argument("qubit_family: expected 7 parameters, got " +
                                  std::to_string(p.size()));
    }
    return Scenario{builtin_partial_model(p[6], p[0], p[1]), spin_observable(p[0], p[1]),
                    spin_observable(p[2], p[3]), bloch_state(p[4], p[5])};
  };
  return family;
}

SearchResult search_violation(const ScenarioFamily& family, const std::string& relation_name,
                              long budget, std::uint64_t seed) {
  if (budget < 1) {
    throw std::invalid_argument("search_violation: budget must be at least 1");
  }
  const auto& names = all_relation_names();
  if (std::find(names.begin(), names.end(), relation_name) == names.end()) {
    throw std::invalid_argument("search_violation: unknown relation '" + relation_name + "'");
  }
  if (family.parameter_names.size() != family.bounds.size() || family.bounds.empty()) {
    throw std::invalid_argument("search_violation: malformed family");
  }

  const std::size_t n = family.bounds.size();
  const auto objective = [&](const std::vector<double>& p) {
    const Scenario scenario = family.realize(p);
    return evaluate_relations(scenario.model, scenario.a, scenario.b, scenario.system)
        .relation(relation_name)
        .slack;
  };

  long evaluations = 0;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_parameters;

  const long restarts = std::max<long>(1, budget / 200);
  for (long r = 0; r < restarts; ++r) {
    long share = budget / restarts + (r < budget % restarts ? 1 : 0);
    if (share < 1) {
      continue;
    }
    const long stop_at = evaluations + share;
    const auto evaluate = [&](const std::vector<double>& p, double& value) {
      if (evaluations >= stop_at) {
        return false;
      }
      value = objective(p);
      ++evaluations;
      if (value < best_value) {
        best_value = value;
        best_parameters = p;
      }
      return true;
    };

    GaussianStream stream(seed ^ (kRestartSalt * static_cast<std::uint64_t>(r + 1)));
    std::vector<double> start(n);
    for (std::size_t j = 0; j < n; ++j) {
      start[j] =
          family.bounds[j].first +
          stream.uniform() * (family.bounds[j].second - family.bounds[j].first);
    }
    nelder_mead(evaluate, start, family.bounds);
    if (evaluations >= budget) {
      break;
    }
  }

  const Scenario best = family.realize(best_parameters);
  RelationReport report = evaluate_relations(best.model, best.a, best.b, best.system);
  return SearchResult{std::move(best_parameters), std::move(report), best_value, evaluations,
                      seed};
}

}  // namespace uncrel
