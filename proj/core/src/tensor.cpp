// Copyright 2026 The qfp Authors
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

#include "qfp/tensor.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace qfp {
namespace {

// 53-bit uniform in (0, 1]; the +1 keeps log() finite below.
double uniform_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

// Box-Muller pair packed as one complex standard normal. Hand-rolled so
// the stream depends only on the mt19937_64 sequence, not on the
// standard library's distribution internals.
Complex complex_gaussian(std::mt19937_64& rng) {
  const double radius = std::sqrt(-2.0 * std::log(uniform_unit(rng)));
  const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Rotates column k of m so its largest-magnitude entry is real
// nonnegative; returns the applied phase.
Complex fix_column_phase(Matrix& m, Eigen::Index k) {
  Eigen::Index imax = 0;
  m.col(k).cwiseAbs().maxCoeff(&imax);
  const Complex pivot = m(imax, k);
  if (std::abs(pivot) == 0.0) return {1.0, 0.0};
  const Complex phase = pivot / std::abs(pivot);
  m.col(k) *= std::conj(phase);
  return phase;
}

}  // namespace

BipartiteState::BipartiteState(Matrix amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() < 1 || amplitudes_.rows() != amplitudes_.cols()) {
    throw DimensionError("BipartiteState: amplitude matrix must be square and nonempty");
  }
  if (!amplitudes_.allFinite()) {
    throw NormalizationError("BipartiteState: amplitudes must be finite");
  }
  const double norm_sq = amplitudes_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kStateNormTolerance) {
    throw NormalizationError("BipartiteState: squared amplitudes must sum to 1");
  }
}

Complex trace_inner_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("trace_inner_product: operands must be square and of equal shape");
  }
  // tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return a.conjugate().cwiseProduct(b).sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SchmidtForm schmidt_decompose(const BipartiteState& state, double schmidt_tolerance) {
  const Eigen::Index n = state.dim();
  Eigen::JacobiSVD<Matrix> svd(state.amplitudes(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();

  int schmidt_number = 0;
  while (schmidt_number < sigma.size() && sigma(schmidt_number) > schmidt_tolerance) {
    ++schmidt_number;
  }

  SchmidtForm form;
  form.lambda = sigma.head(schmidt_number);
  form.base_a = svd.matrixU();
  // amplitudes = U diag(sigma) V^dagger, so the B-side Schmidt basis is
  // the conjugate of V's columns.
  form.base_b = svd.matrixV().conjugate();
  form.schmidt_number = schmidt_number;
  form.ambient_dim = static_cast<int>(n);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex phase = fix_column_phase(form.base_a, k);
    if (k < schmidt_number) {
      form.base_b.col(k) *= phase;
    } else {
      // Zero-coefficient columns carry no constraint between the two
      // sides; fix each independently for reproducibility.
      fix_column_phase(form.base_b, k);
    }
  }
  return form;
}

BipartiteState reconstruct(const SchmidtForm& form) {
  const Eigen::Index n = form.ambient_dim;
  const Eigen::Index ns = form.lambda.size();
  if (form.base_a.rows() != n || form.base_a.cols() != n ||
      form.base_b.rows() != n || form.base_b.cols() != n || ns < 1 || ns > n) {
    throw DimensionError("reconstruct: inconsistent SchmidtForm shapes");
  }
  Matrix amplitudes = form.base_a.leftCols(ns) * form.lambda.asDiagonal() *
                      form.base_b.leftCols(ns).transpose();
  return BipartiteState(std::move(amplitudes));
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("is_unitary: matrix must be square");
  }
  const Matrix gram = m.adjoint() * m;
  const Matrix identity = Matrix::Identity(m.rows(), m.cols());
  return (gram - identity).cwiseAbs().maxCoeff() <= tol;
}

Matrix haar_random_unitary(int n, std::uint64_t seed) {
  if (n < 1) {
    throw DimensionError("haar_random_unitary: dimension must be at least 1");
  }
  std::mt19937_64 rng(seed);
  Matrix ginibre(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ginibre(i, j) = complex_gaussian(rng);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Multiplying column k by the phase of R(k, k) makes the map
  // Ginibre -> Q unique, which is what yields the Haar measure.
  const auto r_diag = qr.matrixQR().diagonal();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r_diag(k));
    q.col(k) *= mag > 0.0 ? r_diag(k) / mag : Complex{1.0, 0.0};
  }
  return q;
}

}  // namespace qfp
