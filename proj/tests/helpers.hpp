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

// Deterministic fixtures shared by the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qfp/constructions.hpp"
#include "qfp/protocol.hpp"
#include "qfp/tensor.hpp"

namespace qfp::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Positive, strictly descending, unit-square-sum coefficients.
inline RealVector random_lambda(int ns, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.25, 1.0);
  std::vector<double> raw(ns);
  for (double& v : raw) v = dist(rng);
  std::sort(raw.begin(), raw.end(), std::greater<>());
  RealVector lambda(ns);
  for (int i = 0; i < ns; ++i) lambda(i) = raw[i];
  lambda /= lambda.norm();
  return lambda;
}

/// Normalized bipartite state with Gaussian amplitudes.
inline BipartiteState random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix amplitudes(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      amplitudes(i, j) = Complex{gauss(rng), gauss(rng)};
    }
  }
  amplitudes /= amplitudes.norm();
  return BipartiteState(std::move(amplitudes));
}

inline UnitaryFamily random_unitary_family(int n, int m, std::uint64_t seed) {
  UnitaryFamily family;
  family.n = n;
  family.label = "random";
  family.members.reserve(m);
  for (int x = 0; x < m; ++x) {
    family.members.push_back(haar_random_unitary(n, seed * 1315423911ULL + x));
  }
  return family;
}

/// Valid scheme in the maximally entangled regime, built around a Haar
/// random Bob family.
inline FingerprintScheme random_assembled_scheme(int n, int m, std::uint64_t seed) {
  return assemble_scheme(random_unitary_family(n, m, seed),
                         maximally_entangled_lambda(n));
}

/// Arbitrary scheme: independent Haar families, random spectrum, random
/// measurement state. Generally fails the one-sided-error constraint.
inline FingerprintScheme random_raw_scheme(int n, int ns, int m, std::uint64_t seed) {
  std::vector<Matrix> alice, bob;
  alice.reserve(m);
  bob.reserve(m);
  for (int x = 0; x < m; ++x) {
    alice.push_back(haar_random_unitary(n, seed * 2654435761ULL + 2 * x));
    bob.push_back(haar_random_unitary(n, seed * 2654435761ULL + 2 * x + 1));
  }
  return FingerprintScheme{n,
                           m,
                           random_lambda(ns, seed + 101),
                           std::move(alice),
                           std::move(bob),
                           random_state(n, seed + 202)};
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Valid scheme with Schmidt number ns strictly below the ambient
/// dimension n. Every member rotates the leading ns columns inside one
/// common subspace and acts freely on the complement, so the products
/// U_x K V_x^T all collapse to the same matrix.
///
/// uniform_block = true uses the uniform spectrum on the block and full
/// unitary rotations; false uses a random spectrum and diagonal phase
/// rotations (the only ones that commute through unequal coefficients).
inline FingerprintScheme embedded_low_rank_scheme(int ns, int n, int m,
                                                  std::uint64_t seed,
                                                  bool uniform_block) {
  const Matrix u0 = haar_random_unitary(n, seed + 11);
  const Matrix v0 = haar_random_unitary(n, seed + 23);
  RealVector lambda = uniform_block
                          ? RealVector(maximally_entangled_lambda(ns))
                          : random_lambda(ns, seed + 37);

  std::mt19937_64 rng(seed + 51);
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);

  std::vector<Matrix> alice, bob;
  alice.reserve(m);
  bob.reserve(m);
  for (int x = 0; x < m; ++x) {
    Matrix w(ns, ns);
    if (uniform_block) {
      w = haar_random_unitary(ns, seed * 7919ULL + x);
    } else {
      w = Matrix::Zero(ns, ns);
      for (int i = 0; i < ns; ++i) w(i, i) = std::polar(1.0, angle(rng));
    }
    const Matrix p = haar_random_unitary(n - ns, seed * 104729ULL + x);
    const Matrix q = haar_random_unitary(n - ns, seed * 15485863ULL + x);
    alice.push_back(u0 * block_diag(w, p));
    bob.push_back(v0 * block_diag(w.conjugate(), q));
  }
  BipartiteState alpha = derive_measurement(alice, bob, lambda, 0);
  return FingerprintScheme{n, m, std::move(lambda), std::move(alice), std::move(bob),
                           std::move(alpha)};
}

}  // namespace qfp::testing
