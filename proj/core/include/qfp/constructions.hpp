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

#include <string>
#include <vector>

#include "qfp/protocol.hpp"

namespace qfp {

/// Ordered list of same-dimension unitaries with a construction label.
struct UnitaryFamily {
  int n = 0;
  std::vector<Matrix> members;
  std::string label;
};

/// First m members X^a Z^b, (a, b) row-major over {0..d-1}^2, where X is
/// the cyclic shift and Z = diag(omega^k) with omega = exp(2*pi*i/d).
/// Distinct members are trace orthogonal, so any subfamily has zero
/// pairwise overlap.
UnitaryFamily weyl_heisenberg_family(int d, int m);

/// n copies of 1/sqrt(n): the uniform Schmidt spectrum of a maximally
/// entangled state.
RealVector maximally_entangled_lambda(int n);

/// Builds a full scheme around Bob's family for the maximally entangled
/// (uniform lambda, N_s = n) regime: pins U_0 = I, induces
/// U_x = V_0^T V_x^* and derives the measurement from message 0. The
/// result satisfies the one-sided-error constraint by construction.
FingerprintScheme assemble_scheme(const UnitaryFamily& bob_family,
                                  const RealVector& lambda);

/// Variant with caller-supplied Alice operators; the measurement is
/// still derived from message 0. One-sidedness is then the caller's
/// responsibility.
FingerprintScheme assemble_scheme(const UnitaryFamily& bob_family,
                                  const RealVector& lambda,
                                  std::vector<Matrix> alice_ops);

}  // namespace qfp
