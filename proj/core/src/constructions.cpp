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

#include "qfp/constructions.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qfp {

UnitaryFamily weyl_heisenberg_family(int d, int m) {
  if (d < 1) {
    throw DimensionError("weyl_heisenberg_family: dimension must be at least 1");
  }
  if (m < 1 || m > d * d) {
    throw RangeError("weyl_heisenberg_family: member count must lie in [1, d^2]");
  }
  // Roots of unity indexed by exponent mod d; exponents stay in integer
  // arithmetic so equal phases are bitwise equal.
  std::vector<Complex> omega(d);
  for (int r = 0; r < d; ++r) {
    omega[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / d);
  }

  UnitaryFamily family;
  family.n = d;
  family.label = "weyl-heisenberg";
  family.members.reserve(m);
  for (int t = 0; t < m; ++t) {
    const int a = t / d;
    const int b = t % d;
    // (X^a Z^b)|j> = omega^{b j} |j + a mod d>
    Matrix member = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
      member((j + a) % d, j) = omega[(b * j) % d];
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

RealVector maximally_entangled_lambda(int n) {
  if (n < 1) {
    throw DimensionError("maximally_entangled_lambda: dimension must be at least 1");
  }
  return RealVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

FingerprintScheme assemble_scheme(const UnitaryFamily& bob_family,
                                  const RealVector& lambda) {
  const int n = bob_family.n;
  const int m = static_cast<int>(bob_family.members.size());
  if (m < 2) {
    throw RangeError("assemble_scheme: a scheme needs at least two messages");
  }
  if (lambda.size() != n) {
    throw UnsupportedConfigError(
        "assemble_scheme: implicit Alice operators need N_s = n");
  }
  if (std::abs(lambda.squaredNorm() - 1.0) > kStateNormTolerance) {
    throw NormalizationError("assemble_scheme: lambda must have unit square sum");
  }
  if (lambda.maxCoeff() - lambda.minCoeff() > 1e-12) {
    throw UnsupportedConfigError(
        "assemble_scheme: non-uniform lambda requires explicit Alice operators");
  }

  // With K proportional to the identity, U_x = V_0^T V_x^* makes every
  // U_x K V_x^T collapse to K V_0^T, so the constraint holds exactly.
  std::vector<Matrix> alice_ops;
  alice_ops.reserve(m);
  const Matrix v0t = bob_family.members[0].transpose();
  for (int x = 0; x < m; ++x) {
    alice_ops.push_back(v0t * bob_family.members[x].conjugate());
  }
  BipartiteState alpha = derive_measurement(alice_ops, bob_family.members, lambda, 0);
  return FingerprintScheme{n, m, lambda, std::move(alice_ops), bob_family.members,
                           std::move(alpha)};
}

FingerprintScheme assemble_scheme(const UnitaryFamily& bob_family,
                                  const RealVector& lambda,
                                  std::vector<Matrix> alice_ops) {
  const int n = bob_family.n;
  const int m = static_cast<int>(bob_family.members.size());
  if (m < 2) {
    throw RangeError("assemble_scheme: a scheme needs at least two messages");
  }
  if (static_cast<int>(alice_ops.size()) != m) {
    throw DimensionError("assemble_scheme: Alice family size must match Bob's");
  }
  BipartiteState alpha = derive_measurement(alice_ops, bob_family.members, lambda, 0);
  return FingerprintScheme{n, m, lambda, std::move(alice_ops), bob_family.members,
                           std::move(alpha)};
}

}  // namespace qfp
