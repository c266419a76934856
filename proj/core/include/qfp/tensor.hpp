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

#pragma once

#include <cstdint>

#include "qfp/errors.hpp"
#include "qfp/types.hpp"

namespace qfp {

/// Pure state of a bipartite system with equal subsystem dimensions.
/// amplitudes()(i, j) is the coefficient of |i>_A |j>_B; construction
/// enforces a square, finite amplitude matrix normalized to 1 within
/// kStateNormTolerance.
class BipartiteState {
 public:
  explicit BipartiteState(Matrix amplitudes);

  Eigen::Index dim() const { return amplitudes_.rows(); }
  const Matrix& amplitudes() const { return amplitudes_; }

 private:
  Matrix amplitudes_;
};

/// Schmidt decomposition of a bipartite state.
///
/// lambda holds the schmidt_number coefficients above the truncation
/// tolerance, strictly descending, with sum of squares 1. base_a and
/// base_b are full ambient_dim x ambient_dim unitaries whose leading
/// columns carry the Schmidt vectors; the state is
///   amplitudes(i, j) = sum_k lambda(k) * base_a(i, k) * base_b(j, k).
struct SchmidtForm {
  RealVector lambda;
  Matrix base_a;
  Matrix base_b;
  int schmidt_number = 0;
  int ambient_dim = 0;
};

/// tr(A^dagger B) for square matrices of equal shape. Conjugate
/// symmetric: trace_inner_product(a, b) == conj(trace_inner_product(b, a)).
Complex trace_inner_product(const Matrix& a, const Matrix& b);

/// Tensor product with row-major index pairing:
/// kron(A, B)(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Schmidt decomposition via singular values of the amplitude matrix.
/// Coefficients at or below schmidt_tolerance are treated as zero when
/// counting the Schmidt number. The phase of each retained Schmidt pair
/// is fixed so the largest-magnitude entry of the left vector is real
/// nonnegative.
SchmidtForm schmidt_decompose(const BipartiteState& state,
                              double schmidt_tolerance = kSchmidtTolerance);

/// Rebuilds the state of a SchmidtForm.
BipartiteState reconstruct(const SchmidtForm& form);

/// True iff the max-entry deviation of M^dagger M from the identity is
/// at most tol. M must be square.
bool is_unitary(const Matrix& m, double tol = kUnitaryTolerance);

/// Haar-distributed n x n unitary: QR orthonormalization of an i.i.d.
/// complex-Gaussian matrix with the R-diagonal phases folded back in.
/// Deterministic for a fixed (n, seed) pair.
Matrix haar_random_unitary(int n, std::uint64_t seed);

}  // namespace qfp
