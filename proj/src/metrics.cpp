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

#include "uncrel/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uncrel {

namespace {

constexpr double kUnbiasedTolerance = 1e-10;

double real_expectation(const Matrix& m, const Vector& state) {
  return state.dot(m * state).real();
}

// Standard deviation of a hermitian matrix on a state vector. The second
// moment is computed as |m s|^2, which is non-negative by construction;
// only the mean subtraction can push the variance below zero.
double std_dev_impl(const Matrix& m, const Vector& state, const char* what) {
  const double mean = state.dot(m * state).real();
  const double second_moment = (m * state).squaredNorm();
  const double variance = second_moment - mean * mean;
  if (variance < -tol::structural) {
    throw std::runtime_error(std::string(what) + ": variance " + std::to_string(variance) +
                             " below the numerical-integrity floor");
  }
  return std::sqrt(std::max(variance, 0.0));
}

// Root mean square of a hermitian deviation operator on a state.
double rms(const Matrix& deviation, const Vector& state) {
  return (deviation * state).norm();
}

// Columns are the embedded basis vectors |j> (x) |xi|, so embed^dag X embed
// is the partial expectation of X over the apparatus state.
Matrix apparatus_embedding(const MeasurementModel& model) {
  const int ds = model.dim_system();
  const int da = model.dim_apparatus();
  Matrix embed = Matrix::Zero(ds * da, ds);
  for (int j = 0; j < ds; ++j) {
    embed.block(j * da, j, da, 1) = model.apparatus_state().amplitudes();
  }
  return embed;
}

UnbiasednessFlags unbiasedness_impl(const OutOperators& out, const MeasurementModel& model,
                                    double tolerance) {
  const Matrix embed = apparatus_embedding(model);
  const auto partial_max = [&embed](const Matrix& x) {
    return max_abs(embed.adjoint() * x * embed);
  };
  const Matrix error_dev = out.m_out.entries() - out.a_in.entries();
  const Matrix disturb_dev = out.b_out.entries() - out.b_in.entries();

  UnbiasednessFlags flags;
  flags.residuals[0] = partial_max(error_dev);
  flags.residuals[1] = partial_max(out.a_in.entries() * error_dev);
  flags.residuals[2] = partial_max(error_dev * out.a_in.entries());
  flags.residuals[3] = partial_max(disturb_dev);
  flags.residuals[4] = partial_max(out.b_in.entries() * disturb_dev);
  flags.residuals[5] = partial_max(disturb_dev * out.b_in.entries());
  flags.measurement_unbiased =
      std::max({flags.residuals[0], flags.residuals[1], flags.residuals[2]}) <= tolerance;
  flags.disturbance_unbiased =
      std::max({flags.residuals[3], flags.residuals[4], flags.residuals[5]}) <= tolerance;
  return flags;
}

RelationEntry make_entry(const char* name, double lhs, double rhs, bool asserted) {
  const double slack = lhs - rhs;
  return RelationEntry{name, lhs, rhs, slack, slack >= tol::slack_floor, asserted};
}

}  // namespace

const std::vector<std::string>& all_relation_names() {
  static const std::vector<std::string> names = {
      relation_names::ozawa,         relation_names::robertson_in,
      relation_names::heisenberg_naive, relation_names::robertson_out,
      relation_names::fujikawa,      relation_names::arthurs_kelly,
  };
  return names;
}

const RelationEntry& RelationReport::relation(std::string_view name) const {
  for (const RelationEntry& entry : relations) {
    if (entry.name == name) {
      return entry;
    }
  }
  throw std::invalid_argument("RelationReport: unknown relation '" + std::string(name) + "'");
}

double std_dev(const Operator& o, const QuantumState& s) {
  if (o.dim() != s.dim()) {
    throw std::invalid_argument("std_dev: dimension mismatch " + std::to_string(o.dim()) +
                                " vs " + std::to_string(s.dim()));
  }
  if (hermiticity_defect(o.entries()) > tol::structural) {
    throw std::invalid_argument("std_dev: operator must be hermitian");
  }
  return std_dev_impl(o.entries(), s.amplitudes(), "std_dev");
}

double error_epsilon(const MeasurementModel& model, const Operator& a,
                     const QuantumState& system) {
  const OutOperators out = out_operators(model, a, a);
  const QuantumState joint = joint_initial_state(system, model);
  return rms(out.m_out.entries() - out.a_in.entries(), joint.amplitudes());
}

double disturbance_eta(const MeasurementModel& model, const Operator& b,
                       const QuantumState& system) {
  const OutOperators out = out_operators(model, b, b);
  const QuantumState joint = joint_initial_state(system, model);
  return rms(out.b_out.entries() - out.b_in.entries(), joint.amplitudes());
}

RelationReport evaluate_relations(const MeasurementModel& model, const Operator& a,
                                  const Operator& b, const QuantumState& system) {
  const OutOperators out = out_operators(model, a, b);
  const QuantumState joint = joint_initial_state(system, model);
  const Vector& state = joint.amplitudes();

  const Matrix error_dev = out.m_out.entries() - out.a_in.entries();
  const Matrix disturb_dev = out.b_out.entries() - out.b_in.entries();

  RelationReport report;
  report.epsilon = rms(error_dev, state);
  report.eta = rms(disturb_dev, state);
  report.sigma_a = std_dev_impl(out.a_in.entries(), state, "evaluate_relations(sigma_a)");
  report.sigma_b = std_dev_impl(out.b_in.entries(), state, "evaluate_relations(sigma_b)");
  report.bar_epsilon = report.epsilon + report.sigma_a;
  report.bar_eta = report.eta + report.sigma_b;
  report.sigma_m_out = std_dev_impl(out.m_out.entries(), state, "evaluate_relations(sigma_m_out)");
  report.sigma_b_out = std_dev_impl(out.b_out.entries(), state, "evaluate_relations(sigma_b_out)");

  const Matrix in_commutator =
      out.a_in.entries() * out.b_in.entries() - out.b_in.entries() * out.a_in.entries();
  const Matrix dev_commutator = error_dev * disturb_dev - disturb_dev * error_dev;
  report.commutator_bound = 0.5 * std::abs(state.dot(in_commutator * state));
  report.out_commutator_bound = 0.5 * std::abs(state.dot(dev_commutator * state));

  const UnbiasednessFlags flags = unbiasedness_impl(out, model, kUnbiasedTolerance);
  const bool both_unbiased = flags.measurement_unbiased && flags.disturbance_unbiased;

  const double eps = report.epsilon;
  const double eta = report.eta;
  const double half_bound = report.commutator_bound;
  report.relations.push_back(make_entry(
      relation_names::ozawa, eps * eta + report.sigma_a * eta + eps * report.sigma_b, half_bound,
      /*asserted=*/true));
  report.relations.push_back(make_entry(relation_names::robertson_in,
                                        report.sigma_a * report.sigma_b, half_bound,
                                        /*asserted=*/true));
  report.relations.push_back(make_entry(relation_names::heisenberg_naive, eps * eta, half_bound,
                                        /*asserted=*/false));
  report.relations.push_back(make_entry(relation_names::robertson_out, eps * eta,
                                        report.out_commutator_bound,
                                        /*asserted=*/true));
  report.relations.push_back(make_entry(relation_names::fujikawa,
                                        report.bar_epsilon * report.bar_eta, 2.0 * half_bound,
                                        /*asserted=*/true));
  // The Arthurs-Kelly analogue is a theorem only for scenarios unbiased in
  // both channels; it is asserted exactly then.
  report.relations.push_back(make_entry(relation_names::arthurs_kelly,
                                        report.sigma_m_out * report.sigma_b_out, 2.0 * half_bound,
                                        /*asserted=*/both_unbiased));
  return report;
}

DecompositionResidual decomposition_residual(const MeasurementModel& model, const Operator& a,
                                             const Operator& b) {
  const OutOperators out = out_operators(model, a, b);
  const Matrix& m_out = out.m_out.entries();
  const Matrix& b_out = out.b_out.entries();
  const Matrix& a_in = out.a_in.entries();
  const Matrix& b_in = out.b_in.entries();
  const auto comm = [](const Matrix& x, const Matrix& y) { return (x * y - y * x).eval(); };

  const Matrix lhs = comm(m_out, b_out);
  const Matrix rhs = comm(m_out - a_in, b_out - b_in) + comm(a_in, b_out - b_in) +
                     comm(m_out - a_in, b_in) + comm(a_in, b_in);
  return DecompositionResidual{max_abs(lhs - rhs), max_abs(lhs)};
}

UnbiasednessFlags unbiasedness(const MeasurementModel& model, const Operator& a,
                               const Operator& b, double tolerance) {
  return unbiasedness_impl(out_operators(model, a, b), model, tolerance);
}

VarianceDecompositionResiduals variance_decomposition_check(const MeasurementModel& model,
                                                            const Operator& a, const Operator& b,
                                                            const QuantumState& system) {
  const OutOperators out = out_operators(model, a, b);
  const QuantumState joint = joint_initial_state(system, model);
  const Vector& state = joint.amplitudes();

  const double eps = rms(out.m_out.entries() - out.a_in.entries(), state);
  const double eta = rms(out.b_out.entries() - out.b_in.entries(), state);
  const double sigma_a = std_dev_impl(out.a_in.entries(), state, "variance_decomposition_check");
  const double sigma_b = std_dev_impl(out.b_in.entries(), state, "variance_decomposition_check");
  const double sigma_m = std_dev_impl(out.m_out.entries(), state, "variance_decomposition_check");
  const double sigma_bo = std_dev_impl(out.b_out.entries(), state, "variance_decomposition_check");
  return VarianceDecompositionResiduals{
      std::abs(sigma_m * sigma_m - eps * eps - sigma_a * sigma_a),
      std::abs(sigma_bo * sigma_bo - eta * eta - sigma_b * sigma_b)};
}

ChainInequality chain_inequality(const MeasurementModel& model, const Operator& a,
                                 const Operator& b, const QuantumState& system) {
  const OutOperators out = out_operators(model, a, b);
  const QuantumState joint = joint_initial_state(system, model);
  const Vector& state = joint.amplitudes();

  const double eps = rms(out.m_out.entries() - out.a_in.entries(), state);
  const double eta = rms(out.b_out.entries() - out.b_in.entries(), state);
  const double sigma_a = std_dev_impl(out.a_in.entries(), state, "chain_inequality");
  const double sigma_b = std_dev_impl(out.b_in.entries(), state, "chain_inequality");
  const double sigma_m = std_dev_impl(out.m_out.entries(), state, "chain_inequality");
  const double sigma_bo = std_dev_impl(out.b_out.entries(), state, "chain_inequality");
  return ChainInequality{(eps + sigma_a) * (eta + sigma_b),
                         std::sqrt(eps * eps + sigma_a * sigma_a) *
                             std::sqrt(eta * eta + sigma_b * sigma_b),
                         sigma_m * sigma_bo};
}

}  // namespace uncrel
