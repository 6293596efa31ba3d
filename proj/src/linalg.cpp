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

#include "uncrel/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uncrel {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint().eval());
}

double unitarity_defect(const Matrix& m) {
  return max_abs(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()));
}

Operator::Operator(Matrix entries, OperatorKind kind)
    : entries_(std::move(entries)), kind_(kind) {}

Operator Operator::observable(Matrix entries) {
  require_square(entries, "Operator::observable");
  const double defect = hermiticity_defect(entries);
  if (defect > tol::structural) {
    throw std::invalid_argument("Operator::observable: hermiticity defect " +
                                std::to_string(defect) + " exceeds tolerance");
  }
  return Operator(std::move(entries), OperatorKind::observable);
}

Operator Operator::unitary(Matrix entries) {
  require_square(entries, "Operator::unitary");
  const double defect = unitarity_defect(entries);
  if (defect > tol::unitarity) {
    throw std::invalid_argument("Operator::unitary: unitarity defect " + std::to_string(defect) +
                                " exceeds tolerance");
  }
  return Operator(std::move(entries), OperatorKind::unitary);
}

Operator Operator::general(Matrix entries) {
  require_square(entries, "Operator::general");
  return Operator(std::move(entries), OperatorKind::general);
}

QuantumState::QuantumState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw std::invalid_argument("QuantumState: dimension must be positive");
  }
  const double defect = std::abs(amplitudes_.norm() - 1.0);
  if (defect > tol::structural) {
    throw std::invalid_argument("QuantumState: norm deviates from 1 by " +
                                std::to_string(defect));
  }
}

QuantumState QuantumState::basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw std::invalid_argument("QuantumState::basis: index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dim));
  }
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return QuantumState(std::move(v));
}

Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
    }
  }
  if (a.is_observable() && b.is_observable()) {
    return Operator::observable(std::move(out));
  }
  if (a.is_unitary() && b.is_unitary()) {
    return Operator::unitary(std::move(out));
  }
  return Operator::general(std::move(out));
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  const int da = a.dim();
  const int db = b.dim();
  Vector out(da * db);
  for (int i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
  }
  return QuantumState(std::move(out));
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return Operator::general(a.entries() * b.entries() - b.entries() * a.entries());
}

Complex expectation(const Operator& o, const QuantumState& s) {
  require_same_dim(o.dim(), s.dim(), "expectation");
  return s.amplitudes().dot(o.entries() * s.amplitudes());
}

Operator adjoint(const Operator& o) {
  Matrix m = o.entries().adjoint();
  switch (o.kind()) {
    case OperatorKind::observable:
      return Operator::observable(std::move(m));
    case OperatorKind::unitary:
      return Operator::unitary(std::move(m));
    default:
      return Operator::general(std::move(m));
  }
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms; u1 is kept away from zero for the log.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex GaussianStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

double GaussianStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

QuantumState haar_random_state(int dim, std::uint64_t seed) {
  GaussianStream stream(seed);
  return haar_random_state(dim, stream);
}

QuantumState haar_random_state(int dim, GaussianStream& stream) {
  if (dim < 1) {
    throw std::invalid_argument("haar_random_state: dimension must be positive");
  }
  Vector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      v[i] = stream.complex_normal();
    }
    norm = v.norm();
  } while (norm < 1e-6);
  return QuantumState(v / norm);
}

Operator random_unitary(int dim, std::uint64_t seed) {
  GaussianStream stream(seed);
  return random_unitary(dim, stream);
}

Operator random_unitary(int dim, GaussianStream& stream) {
  if (dim < 1) {
    throw std::invalid_argument("random_unitary: dimension must be positive");
  }
  Matrix q(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      q(i, j) = stream.complex_normal();
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
      }
    }
    const double norm = q.col(j).norm();
    if (norm < 1e-8) {
      // Numerically dependent column; redraw it and redo this step.
      for (int i = 0; i < dim; ++i) {
        q(i, j) = stream.complex_normal();
      }
      --j;
      continue;
    }
    q.col(j) /= norm;
  }
  return Operator::unitary(std::move(q));
}

}  // namespace uncrel
