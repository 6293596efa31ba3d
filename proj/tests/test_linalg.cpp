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
#include <complex>

#include <doctest.h>

#include "uncrel/linalg.hpp"
#include "uncrel/model.hpp"
#include "uncrel/search.hpp"

using namespace uncrel;

namespace {

const Complex kImag{0.0, 1.0};

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

// Matrix with dyadic-rational entries (multiples of 1/4 in [-2, 2]). Entry
// products of three such factors are exact in double precision, which is
// what makes the associativity check below an equality, not an approximation.
Operator dyadic_operator(int dim, GaussianStream& stream) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = std::floor(stream.uniform() * 17.0 - 8.0) / 4.0;
      const double im = std::floor(stream.uniform() * 17.0 - 8.0) / 4.0;
      m(i, j) = Complex(re, im);
    }
  }
  return Operator::general(m);
}

}  // namespace

TEST_CASE("tensor: identity, pauli embeddings, basis flips") {
  const Operator i2 = Operator::observable(identity(2));
  CHECK(max_abs(tensor(i2, i2).entries() - identity(4)) == 0.0);

  const Matrix zi = tensor(pauli_z(), i2).entries();
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs(zi - expected) == 0.0);

  const Operator xx = tensor(pauli_x(), pauli_x());
  const QuantumState zero_zero = tensor(QuantumState::basis(2, 0), QuantumState::basis(2, 0));
  const Vector flipped = xx.entries() * zero_zero.amplitudes();
  Vector expected_state = Vector::Zero(4);
  expected_state[3] = 1.0;
  CHECK((flipped - expected_state).norm() == 0.0);
}

TEST_CASE("tensor: associativity is exact on dyadic entries") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GaussianStream stream(seed);
    const Operator a = dyadic_operator(2, stream);
    const Operator b = dyadic_operator(3, stream);
    const Operator c = dyadic_operator(2, stream);
    const Matrix left = tensor(tensor(a, b), c).entries();
    const Matrix right = tensor(a, tensor(b, c)).entries();
    CHECK(max_abs(left - right) == 0.0);
  }
}

TEST_CASE("tensor: joint index puts the left factor first") {
  // |0> (x) |1> must land on joint index 0*2 + 1 = 1.
  const QuantumState joint = tensor(QuantumState::basis(2, 0), QuantumState::basis(2, 1));
  CHECK(joint.amplitudes()[1] == Complex(1.0, 0.0));
  CHECK(joint.amplitudes().cwiseAbs().sum() == 1.0);
}

TEST_CASE("commutator: pauli algebra and antisymmetry") {
  GaussianStream self_stream(11);
  const Operator a = random_hermitian(3, self_stream);
  CHECK(max_abs(commutator(a, a).entries()) == 0.0);

  CHECK(max_abs(commutator(pauli_z(), pauli_x()).entries() - 2.0 * kImag * pauli_y().entries()) ==
        0.0);
  CHECK(max_abs(commutator(pauli_x(), pauli_y()).entries() - 2.0 * kImag * pauli_z().entries()) ==
        0.0);

  GaussianStream stream(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator x = random_hermitian(4, stream);
    const Operator y = random_hermitian(4, stream);
    CHECK(max_abs((commutator(x, y).entries() + commutator(y, x).entries())) == 0.0);
  }

  const Operator b2 = Operator::observable(identity(2));
  const Operator b3 = Operator::observable(identity(3));
  CHECK_THROWS_AS(commutator(b2, b3), std::invalid_argument);
}

TEST_CASE("expectation: eigenstates and equatorial states") {
  const QuantumState zero = QuantumState::basis(2, 0);
  const QuantumState plus_y = bloch_state(std::numbers::pi / 2, std::numbers::pi / 2);

  CHECK(expectation(pauli_z(), zero).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(expectation(pauli_z(), plus_y)) <= 1e-12);
  CHECK(expectation(pauli_y(), plus_y).real() == doctest::Approx(1.0).epsilon(1e-14));

  const Operator i3 = Operator::observable(identity(3));
  CHECK_THROWS_AS(expectation(i3, zero), std::invalid_argument);
}

TEST_CASE("expectation: hermitian operators give real values") {
  GaussianStream stream(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator o = random_hermitian(4, stream);
    const QuantumState s = haar_random_state(4, stream);
    CHECK(std::abs(expectation(o, s).imag()) <= 1e-12);
  }
}

TEST_CASE("variance is non-negative for hermitian operators") {
  GaussianStream stream(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator o = random_hermitian(5, stream);
    const QuantumState s = haar_random_state(5, stream);
    const Complex mean = expectation(o, s);
    const Matrix centered = o.entries() - mean.real() * identity(5);
    const Operator squared = Operator::general(centered * centered);
    CHECK(expectation(squared, s).real() >= -1e-12);
  }
}

TEST_CASE("adjoint: fixed points, conjugation, exact involution") {
  CHECK(max_abs(adjoint(Operator::observable(identity(2))).entries() - identity(2)) == 0.0);
  CHECK(max_abs(adjoint(pauli_y()).entries() - pauli_y().entries()) == 0.0);

  Matrix d(2, 2);
  d << kImag, 0, 0, 1;
  Matrix d_conj(2, 2);
  d_conj << -kImag, 0, 0, 1;
  CHECK(max_abs(adjoint(Operator::general(d)).entries() - d_conj) == 0.0);

  GaussianStream stream(31);
  const Operator g = dyadic_operator(4, stream);
  CHECK(max_abs(adjoint(adjoint(g)).entries() - g.entries()) == 0.0);
}

TEST_CASE("haar_random_state: normalization, determinism, sampler mean") {
  const QuantumState s = haar_random_state(2, 424242);
  CHECK(std::abs(s.amplitudes().norm() - 1.0) <= 1e-12);

  const QuantumState again = haar_random_state(2, 424242);
  CHECK((s.amplitudes() - again.amplitudes()).norm() == 0.0);
  const QuantumState other = haar_random_state(2, 424243);
  CHECK((s.amplitudes() - other.amplitudes()).norm() > 0.0);

  CHECK_THROWS_AS(haar_random_state(0, 1), std::invalid_argument);

  // Monte-Carlo check of the sampler itself: <Z> averages to zero.
  GaussianStream stream(20260810);
  double total = 0.0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    total += expectation(pauli_z(), haar_random_state(2, stream)).real();
  }
  CHECK(std::abs(total / samples) <= 0.02);
}

TEST_CASE("random_unitary: unitarity, determinism, determinant modulus") {
  for (std::uint64_t seed : {1ull, 77ull, 901ull}) {
    for (int dim : {2, 3, 4, 16}) {
      const Operator u = random_unitary(dim, seed);
      CHECK(unitarity_defect(u.entries()) <= 1e-10);
    }
  }

  const Operator u = random_unitary(4, 5150);
  const Operator again = random_unitary(4, 5150);
  CHECK(max_abs(u.entries() - again.entries()) == 0.0);

  CHECK(std::abs(std::abs(random_unitary(3, 99).entries().determinant()) - 1.0) <= 1e-9);
  CHECK_THROWS_AS(random_unitary(0, 1), std::invalid_argument);
}

TEST_CASE("operator factories enforce declared roles") {
  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;  // antisymmetric real, not hermitian
  CHECK_THROWS_AS(Operator::observable(skew), std::invalid_argument);

  Matrix stretched = 2.0 * identity(2);
  CHECK_THROWS_AS(Operator::unitary(stretched), std::invalid_argument);
  CHECK_NOTHROW(Operator::general(stretched));

  Vector long_vector(2);
  long_vector << 1.0, 1.0;
  CHECK_THROWS_AS(QuantumState{long_vector}, std::invalid_argument);
}
