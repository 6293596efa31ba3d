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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "brute_force.hpp"
#include "uncrel/metrics.hpp"
#include "uncrel/model.hpp"
#include "uncrel/search.hpp"

using namespace uncrel;

namespace {

const double kPi = std::numbers::pi;

MeasurementModel trivial_model() {
  return MeasurementModel(2, 2, QuantumState::basis(2, 0),
                          Operator::unitary(Matrix::Identity(4, 4)), pauli_z());
}

Matrix to_eigen(const brute::Mat& m) {
  Matrix out(m.n, m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j);
  }
  return out;
}

}  // namespace

TEST_CASE("MeasurementModel enforces its invariants") {
  CHECK_THROWS_AS(MeasurementModel(2, 2, QuantumState::basis(3, 0),
                                   Operator::unitary(Matrix::Identity(4, 4)), pauli_z()),
                  std::invalid_argument);
  CHECK_THROWS_AS(MeasurementModel(2, 2, QuantumState::basis(2, 0),
                                   Operator::unitary(Matrix::Identity(6, 6)), pauli_z()),
                  std::invalid_argument);
  CHECK_THROWS_AS(MeasurementModel(2, 2, QuantumState::basis(2, 0),
                                   Operator::general(2.0 * Matrix::Identity(4, 4)), pauli_z()),
                  std::invalid_argument);
  Matrix not_hermitian(2, 2);
  not_hermitian << 0, 1, 2, 0;
  CHECK_THROWS_AS(MeasurementModel(2, 2, QuantumState::basis(2, 0),
                                   Operator::unitary(Matrix::Identity(4, 4)),
                                   Operator::general(not_hermitian)),
                  std::invalid_argument);
}

TEST_CASE("out_operators: identity interaction is a no-op conjugation") {
  const MeasurementModel model = trivial_model();
  const OutOperators out = out_operators(model, pauli_z(), pauli_x());

  const Matrix meter_in = tensor(Operator::observable(Matrix::Identity(2, 2)), pauli_z()).entries();
  const Matrix b_in = tensor(pauli_x(), Operator::observable(Matrix::Identity(2, 2))).entries();
  CHECK(max_abs(out.m_out.entries() - meter_in) == 0.0);
  CHECK(max_abs(out.b_out.entries() - b_in) == 0.0);

  const Operator wrong_dim = Operator::observable(Matrix::Identity(3, 3));
  CHECK_THROWS_AS(out_operators(model, wrong_dim, wrong_dim), std::invalid_argument);
}

TEST_CASE("out_operators: controlled-NOT conjugation against brute force") {
  const MeasurementModel model = builtin_cnot_model(0.0, 0.0);

  // Oracle: conjugate I (x) Z and X (x) I by the hand-written CNOT.
  const brute::Mat u = brute::cnot();
  const brute::Mat meter_out =
      brute::mul(brute::mul(brute::dagger(u), brute::kron(brute::eye(2), brute::sigma_z())), u);
  const brute::Mat b_out =
      brute::mul(brute::mul(brute::dagger(u), brute::kron(brute::sigma_x(), brute::eye(2))), u);
  CHECK(brute::max_abs(brute::sub(meter_out, brute::kron(brute::sigma_z(), brute::sigma_z()))) ==
        0.0);
  CHECK(brute::max_abs(brute::sub(b_out, brute::kron(brute::sigma_x(), brute::sigma_x()))) == 0.0);

  const OutOperators out = out_operators(model, pauli_z(), pauli_x());
  CHECK(max_abs(out.m_out.entries() - to_eigen(meter_out)) <= 1e-12);
  CHECK(max_abs(out.b_out.entries() - to_eigen(b_out)) <= 1e-12);
}

TEST_CASE("out_operators: hermiticity and commuting outputs on random models") {
  for (int trial = 0; trial < 25; ++trial) {
    const Scenario s = random_scenario(2, 3, 1000 + trial);
    const OutOperators out = out_operators(s.model, s.a, s.b);
    for (const Operator* op : {&out.m_out, &out.b_out, &out.a_in, &out.b_in}) {
      CHECK(hermiticity_defect(op->entries()) <= 1e-12);
    }
    CHECK(max_abs(commutator(out.m_out, out.b_out).entries()) <= 1e-10);
  }
}

TEST_CASE("joint_initial_state follows the fixed index convention") {
  const MeasurementModel model = trivial_model();
  const QuantumState zero = QuantumState::basis(2, 0);
  const QuantumState joint = joint_initial_state(zero, model);
  CHECK(joint.amplitudes()[0] == Complex(1.0, 0.0));
  CHECK(joint.dim() == 4);

  const QuantumState plus_y = bloch_state(kPi / 2, kPi / 2);
  const QuantumState joint_y = joint_initial_state(plus_y, model);
  // (|0> + i|1>)/sqrt(2) (x) |0> = (e0 + i e2)/sqrt(2).
  CHECK(std::abs(joint_y.amplitudes()[0] - 1.0 / std::numbers::sqrt2) <= 1e-12);
  CHECK(std::abs(joint_y.amplitudes()[2] - Complex(0.0, 1.0 / std::numbers::sqrt2)) <= 1e-12);
  CHECK(std::abs(joint_y.amplitudes()[1]) <= 1e-15);
  CHECK(std::abs(joint_y.amplitudes()[3]) <= 1e-15);
  CHECK(std::abs(joint_y.amplitudes().norm() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(joint_initial_state(QuantumState::basis(3, 0), model), std::invalid_argument);
}

TEST_CASE("builtin_cnot_model: zero angles give the standard controlled-NOT") {
  const MeasurementModel model = builtin_cnot_model(0.0, 0.0);
  CHECK(max_abs(model.interaction().entries() - to_eigen(brute::cnot())) == 0.0);
  CHECK(max_abs(model.meter().entries() - pauli_z().entries()) == 0.0);
  CHECK(model.apparatus_state().amplitudes()[0] == Complex(1.0, 0.0));
}

TEST_CASE("builtin_cnot_model: measurement error vanishes along its direction") {
  const QuantumState plus_y = bloch_state(kPi / 2, kPi / 2);
  CHECK(error_epsilon(builtin_cnot_model(0.0, 0.0), pauli_z(), plus_y) <= 1e-12);

  GaussianStream stream(41);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = stream.uniform() * kPi;
    const double phi = stream.uniform() * 2.0 * kPi;
    const MeasurementModel model = builtin_cnot_model(theta, phi);
    const Operator a = spin_observable(theta, phi);
    const QuantumState system = haar_random_state(2, stream);
    CHECK(error_epsilon(model, a, system) <= 1e-12);

    // Deviation transfer: the evolved meter inherits the spread of A.
    const OutOperators out = out_operators(model, a, a);
    const QuantumState joint = joint_initial_state(system, model);
    CHECK(std::abs(std_dev(out.m_out, joint) - std_dev(a, system)) <= 1e-10);
  }

  // theta = pi/2 measures X exactly.
  GaussianStream state_stream(43);
  for (int trial = 0; trial < 5; ++trial) {
    const QuantumState system = haar_random_state(2, state_stream);
    CHECK(error_epsilon(builtin_cnot_model(kPi / 2, 0.0), pauli_x(), system) <= 1e-12);
  }
}

TEST_CASE("builtin_partial_model: boundaries and interpolation") {
  CHECK(max_abs(builtin_partial_model(0.0, 0.7, 1.3).interaction().entries() -
                Matrix::Identity(4, 4)) <= 1e-12);
  CHECK(max_abs(builtin_partial_model(1.0, 0.7, 1.3).interaction().entries() -
                builtin_cnot_model(0.7, 1.3).interaction().entries()) <= 1e-12);

  CHECK_THROWS_AS(builtin_partial_model(-0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(builtin_partial_model(1.1, 0.0, 0.0), std::invalid_argument);

  // Zero coupling leaves the meter uncorrelated: epsilon = sqrt(2) for a
  // state with <A> = 0 (frozen from the dense matrix oracle).
  const QuantumState plus_y = bloch_state(kPi / 2, kPi / 2);
  const double eps0 = error_epsilon(builtin_partial_model(0.0, 0.0, 0.0), pauli_z(), plus_y);
  CHECK(eps0 == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

  const double eps_half = error_epsilon(builtin_partial_model(0.5, 0.0, 0.0), pauli_z(), plus_y);
  const double eps1 = error_epsilon(builtin_partial_model(1.0, 0.0, 0.0), pauli_z(), plus_y);
  CHECK(eps_half == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eps_half < eps0);
  CHECK(eps_half > eps1);
}
