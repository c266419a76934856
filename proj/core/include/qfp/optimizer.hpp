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
#include <vector>

#include "qfp/bounds.hpp"
#include "qfp/constructions.hpp"

namespace qfp {

enum class InitStrategy { kHaar, kWeylHeisenberg };

/// Search parameters for the coherence minimization over Bob's unitary
/// set. An empty lambda means the uniform spectrum on n. stop_gap
/// terminates once the best coherence reaches
/// (1 + stop_gap) * effective_bound; stop_stall terminates after that
/// many iterations without a 1e-12 improvement (0 disables it). The
/// smoothing temperature starts at smoothing_beta and is multiplied by
/// beta_growth every 200 iterations.
struct OptimizerConfig {
  int m = 2;
  int n = 2;
  RealVector lambda;
  int max_iterations = 2000;
  double step_size = 0.05;
  double smoothing_beta = 50.0;
  double beta_growth = 1.5;
  std::uint64_t seed = 0;
  InitStrategy init = InitStrategy::kHaar;
  double stop_gap = 0.0;
  int stop_stall = 0;
};

struct TraceSample {
  int iteration = 0;
  double coherence = 0.0;
};

/// Optimizer output: the best-seen family, its true (non-smoothed)
/// coherence, the per-iteration coherence trace, and the Welch bound it
/// is measured against.
struct FrameSolution {
  UnitaryFamily bob_ops;
  double coherence = 1.0;
  int iterations_used = 0;
  std::vector<TraceSample> trace;
  BoundReport bound;
};

/// Smoothed maximum of the pairwise overlaps and its gradient.
/// gradient[x] is the derivative with respect to the real and imaginary
/// parts of member x's entries, packed as d/dRe + i d/dIm.
struct SmoothObjective {
  double value = 0.0;
  std::vector<Matrix> gradient;
};

/// q(x, y) = |sum_i lambda_i^2 <v_{x,i}|v_{y,i}>|^2 over the family,
/// where v_{x,i} is column i of member x. Diagonal is 1 for normalized
/// lambda.
OverlapMatrix pairwise_overlaps(const UnitaryFamily& family, const RealVector& lambda);

/// Log-sum-exp relaxation of the maximum pairwise overlap at inverse
/// temperature beta:
///   value = (1/beta) log sum_{x<y} exp(beta q(x, y)).
/// Always upper-bounds the true maximum, by at most log(#pairs)/beta.
SmoothObjective smooth_objective(const UnitaryFamily& family,
                                 const RealVector& lambda, double beta);

/// Unitary polar factor: the Frobenius-nearest unitary to M. Idempotent
/// on unitaries; M must be square and nonsingular.
Matrix retract_to_unitary(const Matrix& m);

/// Smoothed-max gradient descent with polar retraction over Bob's set.
/// Deterministic for a fixed config; returns the best family seen by
/// true coherence, never the last iterate.
FrameSolution optimize(const OptimizerConfig& config);

}  // namespace qfp
