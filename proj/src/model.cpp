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

#include "uncrel/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace uncrel {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix pauli_x_matrix() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

// P+ (x) I + P- (x) block, with P+/- the projectors onto the +1/-1
// eigenvectors of the spin observable along (theta, phi).
Matrix controlled_apparatus_gate(double theta, double phi, const Matrix& block) {
  Vector up(2), down(2);
  up << std::cos(theta / 2), std::exp(kI * phi) * std::sin(theta / 2);
  down << -std::exp(-kI * phi) * std::sin(theta / 2), std::cos(theta / 2);
  const Matrix proj_up = up * up.adjoint();
  const Matrix proj_down = down * down.adjoint();
  Matrix gate(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      gate.block(i * 2, j * 2, 2, 2) =
          proj_up(i, j) * Matrix::Identity(2, 2) + proj_down(i, j) * block;
    }
  }
  return gate;
}

MeasurementModel qubit_meter_model(Matrix interaction) {
  return MeasurementModel(2, 2, QuantumState::basis(2, 0),
                          Operator::unitary(std::move(interaction)),
                          pauli_z());
}

}  // namespace

Operator pauli_x() { return Operator::observable(pauli_x_matrix()); }

Operator pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return Operator::observable(m);
}

Operator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator::observable(m);
}

Operator spin_observable(double theta, double phi) {
  const double sx = std::sin(theta) * std::cos(phi);
  const double sy = std::sin(theta) * std::sin(phi);
  const double sz = std::cos(theta);
  Matrix m(2, 2);
  m << sz, Complex(sx, -sy), Complex(sx, sy), -sz;
  return Operator::observable(m);
}

QuantumState bloch_state(double theta, double phi) {
  Vector v(2);
  v << std::cos(theta / 2), std::exp(kI * phi) * std::sin(theta / 2);
  return QuantumState(v / v.norm());
}

MeasurementModel::MeasurementModel(int dim_system, int dim_apparatus,
                                   QuantumState apparatus_state, Operator interaction,
                                   Operator meter)
    : dim_system_(dim_system),
      dim_apparatus_(dim_apparatus),
      apparatus_state_(std::move(apparatus_state)),
      interaction_(std::move(interaction)),
      meter_(std::move(meter)) {
  if (dim_system_ < 1 || dim_apparatus_ < 1) {
    throw std::invalid_argument("MeasurementModel: dimensions must be positive");
  }
  if (apparatus_state_.dim() != dim_apparatus_) {
    throw std::invalid_argument("MeasurementModel: apparatus_state dimension " +
                                std::to_string(apparatus_state_.dim()) + " != dim_apparatus " +
                                std::to_string(dim_apparatus_));
  }
  if (interaction_.dim() != dim_system_ * dim_apparatus_) {
    throw std::invalid_argument("MeasurementModel: interaction dimension " +
                                std::to_string(interaction_.dim()) + " != joint dimension " +
                                std::to_string(dim_system_ * dim_apparatus_));
  }
  if (unitarity_defect(interaction_.entries()) > tol::unitarity) {
    throw std::invalid_argument("MeasurementModel: interaction is not unitary");
  }
  if (meter_.dim() != dim_apparatus_) {
    throw std::invalid_argument("MeasurementModel: meter dimension " +
                                std::to_string(meter_.dim()) + " != dim_apparatus " +
                                std::to_string(dim_apparatus_));
  }
  if (hermiticity_defect(meter_.entries()) > tol::structural) {
    throw std::invalid_argument("MeasurementModel: meter is not hermitian");
  }
}

OutOperators out_operators(const MeasurementModel& model, const Operator& a, const Operator& b) {
  if (a.dim() != model.dim_system() || b.dim() != model.dim_system()) {
    throw std::invalid_argument("out_operators: observable dimensions " + std::to_string(a.dim()) +
                                ", " + std::to_string(b.dim()) + " != dim_system " +
                                std::to_string(model.dim_system()));
  }
  if (hermiticity_defect(a.entries()) > tol::structural ||
      hermiticity_defect(b.entries()) > tol::structural) {
    throw std::invalid_argument("out_operators: observables must be hermitian");
  }

  const Matrix& u = model.interaction().entries();
  const Matrix identity_system = Matrix::Identity(model.dim_system(), model.dim_system());
  const Matrix identity_apparatus = Matrix::Identity(model.dim_apparatus(), model.dim_apparatus());

  const Operator a_in =
      tensor(a, Operator::observable(identity_apparatus));
  const Operator b_in =
      tensor(b, Operator::observable(identity_apparatus));
  const Operator meter_in =
      tensor(Operator::observable(identity_system), model.meter());

  Operator m_out = Operator::observable(u.adjoint() * meter_in.entries() * u);
  Operator b_out = Operator::observable(u.adjoint() * b_in.entries() * u);

  const double residual = max_abs(commutator(m_out, b_out).entries());
  if (residual > tol::unitarity) {
    throw std::runtime_error(
        "out_operators: evolved meter and evolved B-channel fail to commute, residual " +
        std::to_string(residual));
  }
  return OutOperators{std::move(m_out), std::move(b_out), a_in, b_in};
}

QuantumState joint_initial_state(const QuantumState& system, const MeasurementModel& model) {
  if (system.dim() != model.dim_system()) {
    throw std::invalid_argument("joint_initial_state: system dimension " +
                                std::to_string(system.dim()) + " != dim_system " +
                                std::to_string(model.dim_system()));
  }
  return tensor(system, model.apparatus_state());
}

MeasurementModel builtin_cnot_model(double theta, double phi) {
  return qubit_meter_model(controlled_apparatus_gate(theta, phi, pauli_x_matrix()));
}

MeasurementModel builtin_partial_model(double strength_lambda, double theta, double phi) {
  if (!(strength_lambda >= 0.0 && strength_lambda <= 1.0)) {
    throw std::invalid_argument("builtin_partial_model: lambda " +
                                std::to_string(strength_lambda) + " outside [0, 1]");
  }
  // exp(-i*alpha*(X - I)/2): identity at alpha = 0 and exactly X at alpha = pi,
  // so the family boundaries match the identity and the controlled-NOT.
  const double alpha = strength_lambda * std::numbers::pi;
  const Complex phase = std::exp(kI * (alpha / 2));
  const Matrix rotation = phase * (std::cos(alpha / 2) * Matrix::Identity(2, 2) -
                                   kI * std::sin(alpha / 2) * pauli_x_matrix());
  return qubit_meter_model(controlled_apparatus_gate(theta, phi, rotation));
}

}  // namespace uncrel
