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

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace uncrel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Central tolerances. Structural identities are checked at 1e-12 and
// unitarity at 1e-10; inequality slacks are compared against a -1e-9 floor.
// Double-precision accumulation over dim <= 16 matrices stays well inside
// these margins.
namespace tol {
inline constexpr double structural = 1e-12;
inline constexpr double unitarity = 1e-10;
inline constexpr double slack_floor = -1e-9;
}  // namespace tol

/// Declared role of an operator. Observables must be Hermitian within
/// tol::structural, unitaries unitary within tol::unitarity; the factories
/// reject matrices that fail the corresponding check.
enum class OperatorKind { general, observable, unitary };

/// Largest |entry| of m.
double max_abs(const Matrix& m);

/// Largest |m[i][j] - conj(m[j][i])|.
double hermiticity_defect(const Matrix& m);

/// Largest |entry| of m * m^dagger - I.
double unitarity_defect(const Matrix& m);

/// Dense complex square matrix with a declared role. Immutable after
/// construction; all operations below are pure functions, so operators can
/// be shared freely across threads.
class Operator {
 public:
  static Operator observable(Matrix entries);
  static Operator unitary(Matrix entries);
  static Operator general(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  OperatorKind kind() const { return kind_; }
  const Matrix& entries() const { return entries_; }

  bool is_observable() const { return kind_ == OperatorKind::observable; }
  bool is_unitary() const { return kind_ == OperatorKind::unitary; }

 private:
  Operator(Matrix entries, OperatorKind kind);

  Matrix entries_;
  OperatorKind kind_;
};

/// Pure state vector, unit norm within tol::structural. Immutable.
class QuantumState {
 public:
  explicit QuantumState(Vector amplitudes);

  /// Computational basis vector |index> of the given dimension.
  static QuantumState basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  Vector amplitudes_;
};

/// Kronecker product; the left factor owns the most significant index, so
/// the joint index is left_index * b.dim() + right_index.
Operator tensor(const Operator& a, const Operator& b);
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// a*b - b*a. Dimensions must match.
Operator commutator(const Operator& a, const Operator& b);

/// <s|o|s>. Dimensions must match.
Complex expectation(const Operator& o, const QuantumState& s);

/// Conjugate transpose; an exact involution.
Operator adjoint(const Operator& o);

/// Deterministic Gaussian sampler on top of std::mt19937_64. Box-Muller is
/// spelled out here so streams are reproducible across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  /// Standard normal.
  double normal();

  /// Standard complex normal, E|z|^2 = 1.
  Complex complex_normal();

  /// Uniform double in [0, 1).
  double uniform();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// State with amplitudes drawn as independent standard complex Gaussians,
/// then normalized. Same seed, same state.
QuantumState haar_random_state(int dim, std::uint64_t seed);
QuantumState haar_random_state(int dim, GaussianStream& stream);

/// Haar-distributed unitary: Gram-Schmidt (with one re-orthogonalization
/// pass) of a complex Gaussian matrix. Same seed, same matrix.
Operator random_unitary(int dim, std::uint64_t seed);
Operator random_unitary(int dim, GaussianStream& stream);

}  // namespace uncrel
