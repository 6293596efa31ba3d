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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "uncrel/model.hpp"

namespace uncrel {

// Relation names as they appear in reports, report JSON and CLI flags.
namespace relation_names {
inline constexpr const char* ozawa = "ozawa";
inline constexpr const char* robertson_in = "robertson_in";
inline constexpr const char* heisenberg_naive = "heisenberg_naive";
inline constexpr const char* robertson_out = "robertson_out";
inline constexpr const char* fujikawa = "fujikawa";
inline constexpr const char* arthurs_kelly = "arthurs_kelly";
}  // namespace relation_names

/// All relation names, in report order.
const std::vector<std::string>& all_relation_names();

/// One evaluated inequality. `holds` compares the slack against
/// tol::slack_floor. `asserted` marks the relations the artifact treats as
/// theorems: a violated asserted relation is an integrity failure, while
/// heisenberg_naive may legitimately fail and arthurs_kelly is only asserted
/// when the scenario is unbiased in both channels.
struct RelationEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool asserted = false;
};

/// Every functional of a scenario plus one entry per evaluated relation.
/// bar_epsilon and bar_eta are stored exactly as epsilon + sigma_a and
/// eta + sigma_b. All expectations are taken on the joint initial state.
struct RelationReport {
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  double bar_epsilon = 0.0;
  double bar_eta = 0.0;
  double sigma_m_out = 0.0;
  double sigma_b_out = 0.0;
  double commutator_bound = 0.0;
  double out_commutator_bound = 0.0;
  std::vector<RelationEntry> relations;

  const RelationEntry& relation(std::string_view name) const;
};

/// Whether the measurement (error channel) and disturbance channels are
/// unbiased for every system state. Decided at the operator level: the
/// deviation operators and their cross terms with the initial observable are
/// reduced by partial expectation over the apparatus state, and a channel is
/// unbiased iff all three reduced matrices vanish within the tolerance.
/// residuals holds the six max-abs entries in that order (error channel
/// first).
struct UnbiasednessFlags {
  bool measurement_unbiased = false;
  bool disturbance_unbiased = false;
  std::array<double, 6> residuals{};
};

/// Residuals of the commutator decomposition identity: the evolved-operator
/// commutator minus its four-term deviation expansion (an exact algebraic
/// identity), and the max-abs entry of the evolved commutator itself.
struct DecompositionResidual {
  double identity_residual = 0.0;
  double out_commutator_max = 0.0;
};

/// |sigma^2(M_out) - epsilon^2 - sigma^2(A)| and the B-channel analogue.
/// Each vanishes whenever the corresponding channel is unbiased.
struct VarianceDecompositionResiduals {
  double measurement = 0.0;
  double disturbance = 0.0;
};

/// The chained bound lhs >= mid (= right for unbiased channels), where
/// lhs = bar_epsilon * bar_eta, mid is the root-sum-square product
/// sqrt(eps^2 + sigma_a^2) * sqrt(eta^2 + sigma_b^2), and right is
/// sigma(M_out) * sigma(B_out).
struct ChainInequality {
  double lhs = 0.0;
  double mid = 0.0;
  double right = 0.0;
};

/// sqrt(<(o - <o>)^2>) on s. Variance within -1e-12 of zero clamps to zero;
/// anything more negative is a numerical-integrity error.
double std_dev(const Operator& o, const QuantumState& s);

/// Root mean square of (M_out - A_in) on the joint initial state.
double error_epsilon(const MeasurementModel& model, const Operator& a,
                     const QuantumState& system);

/// Root mean square of (B_out - B_in) on the joint initial state.
double disturbance_eta(const MeasurementModel& model, const Operator& b,
                       const QuantumState& system);

/// Evaluates every relation on one scenario. All slacks are computed from a
/// single set of evolved operators so the report is internally consistent.
RelationReport evaluate_relations(const MeasurementModel& model, const Operator& a,
                                  const Operator& b, const QuantumState& system);

DecompositionResidual decomposition_residual(const MeasurementModel& model, const Operator& a,
                                             const Operator& b);

UnbiasednessFlags unbiasedness(const MeasurementModel& model, const Operator& a,
                               const Operator& b, double tolerance);

VarianceDecompositionResiduals variance_decomposition_check(const MeasurementModel& model,
                                                            const Operator& a, const Operator& b,
                                                            const QuantumState& system);

ChainInequality chain_inequality(const MeasurementModel& model, const Operator& a,
                                 const Operator& b, const QuantumState& system);

}  // namespace uncrel
