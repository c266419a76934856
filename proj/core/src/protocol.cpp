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

#include "qfp/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace qfp {
namespace {

void require_message_index(const FingerprintScheme& scheme, int x) {
  if (x < 0 || x >= scheme.m) {
    throw RangeError("message index out of range");
  }
}

// Flattens amplitudes(i, j) to index i * n + j, matching kron's pairing.
Vector flatten_row_major(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      v(i * m.cols() + j) = m(i, j);
    }
  }
  return v;
}

ValidationReport require_valid(const FingerprintScheme& scheme, double validation_tol) {
  ValidationReport report = validate_one_sided(scheme, validation_tol);
  if (!report.is_valid) {
    throw ValidationError("scheme fails one-sided-error validation");
  }
  return report;
}

// Sine of the largest principal angle between the column spans of two
// orthonormal blocks. The projector form stays accurate near zero,
// where the cosine formulation loses all precision.
double max_principal_angle_sine(const Eigen::Ref<const Matrix>& block_x,
                                const Eigen::Ref<const Matrix>& block_y) {
  const Matrix residual = block_y - block_x * (block_x.adjoint() * block_y);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return std::min(1.0, svd.singularValues().maxCoeff());
}

bool family_spans_invariant(const std::vector<Matrix>& ops, Eigen::Index ns, double tol) {
  const double sine_budget = std::sin(std::min(tol, std::numbers::pi / 2));
  for (std::size_t x = 0; x + 1 < ops.size(); ++x) {
    for (std::size_t y = x + 1; y < ops.size(); ++y) {
      if (max_principal_angle_sine(ops[x].leftCols(ns), ops[y].leftCols(ns)) >
          sine_budget) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Matrix build_K(const RealVector& lambda, int n) {
  if (lambda.size() < 1 || lambda.size() > n) {
    throw DimensionError("build_K: lambda length must lie in [1, n]");
  }
  if (std::abs(lambda.squaredNorm() - 1.0) > kStateNormTolerance) {
    throw NormalizationError("build_K: Schmidt coefficients must have unit square sum");
  }
  Matrix k = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    k(i, i) = lambda(i);
  }
  return k;
}

double acceptance_probability_direct(const FingerprintScheme& scheme, int x, int y) {
  require_message_index(scheme, x);
  require_message_index(scheme, y);
  // The shared state's amplitude matrix in the Schmidt bases is K itself.
  const Matrix shared = build_K(scheme.lambda, scheme.n);
  const Vector received =
      kron(scheme.alice_ops[x], scheme.bob_ops[y]) * flatten_row_major(shared);
  const Complex overlap = flatten_row_major(scheme.alpha.amplitudes()).dot(received);
  return std::norm(overlap);
}

double acceptance_probability_reduced(const FingerprintScheme& scheme, int x, int y) {
  require_message_index(scheme, x);
  require_message_index(scheme, y);
  const Matrix k = build_K(scheme.lambda, scheme.n);
  const Matrix s_xy = scheme.alice_ops[x] * k * scheme.bob_ops[y].transpose();
  return std::norm(trace_inner_product(scheme.alpha.amplitudes(), s_xy));
}

BipartiteState derive_measurement(const std::vector<Matrix>& alice_ops,
                                  const std::vector<Matrix>& bob_ops,
                                  const RealVector& lambda, int reference) {
  if (alice_ops.empty() || alice_ops.size() != bob_ops.size()) {
    throw DimensionError("derive_measurement: operator families must be nonempty and equal sized");
  }
  if (reference < 0 || reference >= static_cast<int>(alice_ops.size())) {
    throw RangeError("derive_measurement: reference message out of range");
  }
  const Matrix& u = alice_ops[reference];
  const Matrix& v = bob_ops[reference];
  const Matrix k = build_K(lambda, static_cast<int>(u.rows()));
  // |A| = 1 holds for any unitary pair, so the state is normalized.
  return BipartiteState(u * k * v.transpose());
}

Matrix derive_bob_from_alice(const Matrix& alice_op, const RealVector& lambda,
                             const Matrix& alpha_matrix) {
  const Eigen::Index n = alice_op.rows();
  if (alice_op.cols() != n || alpha_matrix.rows() != n || alpha_matrix.cols() != n) {
    throw DimensionError("derive_bob_from_alice: operands must be square and of equal shape");
  }
  if (lambda.size() != n || lambda.minCoeff() <= kSchmidtTolerance) {
    throw RankError("derive_bob_from_alice: K must have full rank (N_s = n)");
  }
  const Matrix v =
      (lambda.cwiseInverse().asDiagonal() * (alice_op.adjoint() * alpha_matrix))
          .transpose();
  if (!is_unitary(v, 1e-8)) {
    throw NoUnitarySolutionError(
        "derive_bob_from_alice: constraint has no unitary solution for this measurement");
  }
  return v;
}

ValidationReport validate_one_sided(const FingerprintScheme& scheme, double tol) {
  const Matrix k = build_K(scheme.lambda, scheme.n);
  std::vector<Matrix> diagonal_products;
  diagonal_products.reserve(scheme.m);
  for (int x = 0; x < scheme.m; ++x) {
    diagonal_products.push_back(scheme.alice_ops[x] * k * scheme.bob_ops[x].transpose());
  }

  ValidationReport report;
  double worst = -1.0;
  int offender = 0;
  for (int x = 0; x < scheme.m; ++x) {
    // Every U K V^T has trace norm 1, so this lies in [0, 1] and
    // vanishes exactly when S(x,x) matches S(0,0) up to a phase.
    const double constancy = std::max(
        0.0, 1.0 - std::abs(trace_inner_product(diagonal_products[0], diagonal_products[x])));
    const double diagonal = std::abs(acceptance_probability_reduced(scheme, x, x) - 1.0);
    report.max_constancy_deviation = std::max(report.max_constancy_deviation, constancy);
    report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, diagonal);
    if (std::max(constancy, diagonal) > worst) {
      worst = std::max(constancy, diagonal);
      offender = x;
    }
  }
  report.is_valid = report.max_constancy_deviation <= tol &&
                    report.max_diagonal_deviation <= tol;
  if (!report.is_valid) {
    report.offending_message = offender;
  }
  return report;
}

OverlapMatrix overlap_matrix(const FingerprintScheme& scheme) {
  OverlapMatrix q(scheme.m, scheme.m);
  for (int x = 0; x < scheme.m; ++x) {
    for (int y = 0; y < scheme.m; ++y) {
      q(x, y) = acceptance_probability_reduced(scheme, x, y);
    }
  }
  return q;
}

WorstCaseReport worst_case_error(const FingerprintScheme& scheme, double validation_tol) {
  require_valid(scheme, validation_tol);
  WorstCaseReport report;
  report.overlap_matrix = overlap_matrix(scheme);
  report.p_wce = -1.0;
  for (int x = 0; x < scheme.m; ++x) {
    for (int y = 0; y < scheme.m; ++y) {
      if (x == y) continue;
      // Strict comparison keeps the lexicographically smallest argmax.
      if (report.overlap_matrix(x, y) > report.p_wce) {
        report.p_wce = report.overlap_matrix(x, y);
        report.argmax_pair = {x, y};
      }
    }
  }
  return report;
}

bool column_space_invariance(const FingerprintScheme& scheme, double tol,
                             double validation_tol) {
  require_valid(scheme, validation_tol);
  const Eigen::Index ns = scheme.lambda.size();
  if (ns == scheme.n) {
    return true;
  }
  return family_spans_invariant(scheme.alice_ops, ns, tol) &&
         family_spans_invariant(scheme.bob_ops, ns, tol);
}

std::optional<std::string> scheme_invariant_violation(const FingerprintScheme& scheme) {
  if (scheme.n < 1) return "subsystem dimension must be at least 1";
  if (scheme.m < 2) return "scheme needs at least two messages";
  if (static_cast<int>(scheme.alice_ops.size()) != scheme.m ||
      static_cast<int>(scheme.bob_ops.size()) != scheme.m) {
    return "operator family sizes must equal the message count";
  }
  if (scheme.lambda.size() < 1 || scheme.lambda.size() > scheme.n) {
    return "Schmidt coefficient count must lie in [1, n]";
  }
  for (Eigen::Index i = 0; i < scheme.lambda.size(); ++i) {
    if (!(scheme.lambda(i) > 0.0)) return "Schmidt coefficients must be positive";
    if (i > 0 && scheme.lambda(i) > scheme.lambda(i - 1)) {
      return "Schmidt coefficients must be descending";
    }
  }
  if (std::abs(scheme.lambda.squaredNorm() - 1.0) > kStateNormTolerance) {
    return "Schmidt coefficients must have unit square sum";
  }
  for (int x = 0; x < scheme.m; ++x) {
    const Matrix& u = scheme.alice_ops[x];
    const Matrix& v = scheme.bob_ops[x];
    if (u.rows() != scheme.n || u.cols() != scheme.n || v.rows() != scheme.n ||
        v.cols() != scheme.n) {
      return "operator " + std::to_string(x) + " has the wrong shape";
    }
    if (!is_unitary(u, kUnitaryTolerance)) {
      return "Alice operator " + std::to_string(x) + " is not unitary";
    }
    if (!is_unitary(v, kUnitaryTolerance)) {
      return "Bob operator " + std::to_string(x) + " is not unitary";
    }
  }
  if (scheme.alpha.dim() != scheme.n) {
    return "measurement state dimension must equal n";
  }
  return std::nullopt;
}

}  // namespace qfp
