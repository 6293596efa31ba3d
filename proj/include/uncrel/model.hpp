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

#include "uncrel/linalg.hpp"

namespace uncrel {

// Qubit helpers. The spin direction parametrization is fixed project-wide:
// spin(theta, phi) = sin(theta)cos(phi) X + sin(theta)sin(phi) Y + cos(theta) Z,
// and bloch(theta, phi) is its +1 eigenvector.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator spin_observable(double theta, double phi);
QuantumState bloch_state(double theta, double phi);

/// Indirect von Neumann measurement scheme: system of dimension dim_system
/// coupled to an apparatus of dimension dim_apparatus prepared in a fixed
/// pure state, through a unitary on the joint space; the meter observable is
/// read on the apparatus afterwards. Immutable after construction.
class MeasurementModel {
 public:
  MeasurementModel(int dim_system, int dim_apparatus, QuantumState apparatus_state,
                   Operator interaction, Operator meter);

  int dim_system() const { return dim_system_; }
  int dim_apparatus() const { return dim_apparatus_; }
  int joint_dim() const { return dim_system_ * dim_apparatus_; }
  const QuantumState& apparatus_state() const { return apparatus_state_; }
  const Operator& interaction() const { return interaction_; }
  const Operator& meter() const { return meter_; }

 private:
  int dim_system_;
  int dim_apparatus_;
  QuantumState apparatus_state_;
  Operator interaction_;
  Operator meter_;
};

/// Heisenberg-picture operators on the joint space for a measurement of A
/// that disturbs B: the evolved meter U^dag (I (x) M) U, the evolved
/// B-channel U^dag (B (x) I) U, and the initial embeddings A (x) I, B (x) I.
/// The evolved meter always commutes with the evolved B-channel; that is
/// validated at construction.
struct OutOperators {
  Operator m_out;
  Operator b_out;
  Operator a_in;
  Operator b_in;
};

OutOperators out_operators(const MeasurementModel& model, const Operator& a, const Operator& b);

/// |system> (x) |apparatus_state| on the joint space.
QuantumState joint_initial_state(const QuantumState& system, const MeasurementModel& model);

/// Qubit model that measures the spin observable along (theta, phi) exactly:
/// a controlled-NOT in that eigenbasis (apparatus flipped on the -1 branch),
/// apparatus prepared in |0>, meter Z. The measurement error for the spin
/// observable along the same direction vanishes for every system state.
MeasurementModel builtin_cnot_model(double theta, double phi);

/// Interpolating family: the apparatus flip is replaced by a rotation about
/// its x-axis by lambda*pi (phase-aligned so lambda=1 reproduces the exact
/// controlled-NOT and lambda=0 the identity). lambda must lie in [0, 1].
MeasurementModel builtin_partial_model(double strength_lambda, double theta, double phi);

}  // namespace uncrel
