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

// Test-only brute-force matrix routines. Deliberately independent of the
// library implementation (no Eigen, plain loops over std::vector) so they
// can serve as an oracle for the conjugation and functional computations.

#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace brute {

using cx = std::complex<double>;

struct Mat {
  int n = 0;
  std::vector<cx> e;  // row-major

  Mat() = default;
  explicit Mat(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim) {}

  cx& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  const cx& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

using Vec = std::vector<cx>;

inline Mat eye(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  assert(a.n == b.n);
  Mat out(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      cx sum = 0.0;
      for (int k = 0; k < a.n; ++k) sum += a.at(i, k) * b.at(k, j);
      out.at(i, j) = sum;
    }
  }
  return out;
}

inline Mat dagger(const Mat& a) {
  Mat out(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) out.at(i, j) = std::conj(a.at(j, i));
  }
  return out;
}

inline Mat sub(const Mat& a, const Mat& b) {
  assert(a.n == b.n);
  Mat out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.n * b.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      for (int k = 0; k < b.n; ++k) {
        for (int l = 0; l < b.n; ++l) {
          out.at(i * b.n + k, j * b.n + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

inline cx expval(const Mat& m, const Vec& v) {
  cx sum = 0.0;
  for (int i = 0; i < m.n; ++i) {
    cx row = 0.0;
    for (int j = 0; j < m.n; ++j) row += m.at(i, j) * v[static_cast<std::size_t>(j)];
    sum += std::conj(v[static_cast<std::size_t>(i)]) * row;
  }
  return sum;
}

inline double max_abs(const Mat& m) {
  double best = 0.0;
  for (const cx& z : m.e) best = std::max(best, std::abs(z));
  return best;
}

inline Mat sigma_x() {
  Mat m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

inline Mat sigma_y() {
  Mat m(2);
  m.at(0, 1) = cx(0.0, -1.0);
  m.at(1, 0) = cx(0.0, 1.0);
  return m;
}

inline Mat sigma_z() {
  Mat m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

inline Mat cnot() {
  Mat m(4);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 1.0;
  m.at(2, 3) = 1.0;
  m.at(3, 2) = 1.0;
  return m;
}

// Every functional the relation reports expose, computed by direct dense
// algebra on the joint space.
struct Functionals {
  double epsilon = 0.0;
  double eta = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  double sigma_m_out = 0.0;
  double sigma_b_out = 0.0;
  double commutator_bound = 0.0;
  double out_commutator_bound = 0.0;
};

inline double sdev(const Mat& op, const Vec& state) {
  const double mean = expval(op, state).real();
  const double second = expval(mul(op, op), state).real();
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

inline Functionals functionals(const Mat& interaction, const Mat& a, const Mat& b, const Mat& meter,
                               const Vec& system, const Vec& apparatus) {
  const int ds = a.n;
  const int da = meter.n;
  const Vec joint = kron(system, apparatus);
  const Mat a_in = kron(a, eye(da));
  const Mat b_in = kron(b, eye(da));
  const Mat u_dag = dagger(interaction);
  const Mat m_out = mul(mul(u_dag, kron(eye(ds), meter)), interaction);
  const Mat b_out = mul(mul(u_dag, b_in), interaction);
  const Mat n_dev = sub(m_out, a_in);
  const Mat d_dev = sub(b_out, b_in);

  Functionals f;
  f.epsilon = std::sqrt(std::max(expval(mul(n_dev, n_dev), joint).real(), 0.0));
  f.eta = std::sqrt(std::max(expval(mul(d_dev, d_dev), joint).real(), 0.0));
  f.sigma_a = sdev(a_in, joint);
  f.sigma_b = sdev(b_in, joint);
  f.sigma_m_out = sdev(m_out, joint);
  f.sigma_b_out = sdev(b_out, joint);
  f.commutator_bound = 0.5 * std::abs(expval(sub(mul(a_in, b_in), mul(b_in, a_in)), joint));
  f.out_commutator_bound =
      0.5 * std::abs(expval(sub(mul(n_dev, d_dev), mul(d_dev, n_dev)), joint));
  return f;
}

}  // namespace brute
