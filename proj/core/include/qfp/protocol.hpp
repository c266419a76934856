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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfp/tensor.hpp"

namespace qfp {

/// One shared-entanglement fingerprinting scheme instance.
///
/// Messages are opaque indices 0..m-1. lambda holds the Schmidt
/// coefficients of the shared state (length N_s <= n, descending,
/// sum of squares 1); alice_ops and bob_ops are the two families of m
/// unitaries of size n x n; alpha is the state of the referee's
/// rank-one accepting measurement element.
struct FingerprintScheme {
  int n = 0;
  int m = 0;
  RealVector lambda;
  std::vector<Matrix> alice_ops;
  std::vector<Matrix> bob_ops;
  BipartiteState alpha;
};

/// m x m matrix of pairwise acceptance probabilities q(x, y).
using OverlapMatrix = RealMatrix;

/// Result of the one-sided-error check.
///
/// max_diagonal_deviation is max_x |q(x,x) - 1|. max_constancy_deviation
/// measures, phase invariantly, how far the products U_x K V_x^T stray
/// from a common matrix. offending_message identifies the worst message
/// when the scheme is invalid.
struct ValidationReport {
  bool is_valid = false;
  double max_diagonal_deviation = 0.0;
  double max_constancy_deviation = 0.0;
  std::optional<int> offending_message;
};

/// Worst-case error over unequal message pairs.
struct WorstCaseReport {
  double p_wce = 0.0;
  std::pair<int, int> argmax_pair{0, 0};
  OverlapMatrix overlap_matrix;
};

/// Diagonal n x n matrix carrying the Schmidt coefficients:
/// K = sum_k lambda_k |k><k|, zero outside the first lambda.size()
/// entries. Satisfies tr(K^dagger K) = 1 for normalized lambda.
Matrix build_K(const RealVector& lambda, int n);

/// Acceptance probability by full tensor-product simulation: applies
/// U_x (x) V_y to the shared state and projects onto alpha.
double acceptance_probability_direct(const FingerprintScheme& scheme, int x, int y);

/// Acceptance probability through the reduced trace form
/// |tr(A^dagger U_x K V_y^T)|^2, where A is alpha's coefficient matrix.
/// Agrees with the direct simulation for every scheme.
double acceptance_probability_reduced(const FingerprintScheme& scheme, int x, int y);

/// The measurement state every one-sided scheme must use: coefficient
/// matrix A = U_ref K V_ref^T with the global phase fixed to 0. For a
/// valid scheme the result is reference independent up to phase.
BipartiteState derive_measurement(const std::vector<Matrix>& alice_ops,
                                  const std::vector<Matrix>& bob_ops,
                                  const RealVector& lambda, int reference = 0);

/// Solves U_x K V_x^T = A for Bob's unitary: V_x = (K^-1 U_x^dagger A)^T.
/// Requires full-rank K (lambda length equal to the dimension); throws
/// NoUnitarySolutionError when the solution fails unitarity at 1e-8.
Matrix derive_bob_from_alice(const Matrix& alice_op, const RealVector& lambda,
                             const Matrix& alpha_matrix);

/// Checks the one-sided-error constraint: all U_x K V_x^T equal up to a
/// global phase and q(x,x) = 1.
ValidationReport validate_one_sided(const FingerprintScheme& scheme,
                                    double tol = kValidationTolerance);

/// Full m x m acceptance-probability matrix via the reduced form.
OverlapMatrix overlap_matrix(const FingerprintScheme& scheme);

/// Maximum off-diagonal acceptance probability with a lexicographically
/// smallest argmax pair. Requires a scheme passing validate_one_sided
/// at validation_tol.
WorstCaseReport worst_case_error(const FingerprintScheme& scheme,
                                 double validation_tol = kValidationTolerance);

/// True iff the leading N_s columns of all Alice unitaries span one
/// common subspace, and likewise for Bob's; tol bounds the largest
/// principal angle. Requires a scheme passing validate_one_sided.
bool column_space_invariance(const FingerprintScheme& scheme, double tol,
                             double validation_tol = kValidationTolerance);

/// Returns a description of the first violated structural invariant
/// (shapes, unitarity, lambda normalization and ordering), or nullopt
/// if the scheme is structurally sound. One-sidedness is not checked
/// here; that is validate_one_sided's job.
std::optional<std::string> scheme_invariant_violation(const FingerprintScheme& scheme);

}  // namespace qfp
