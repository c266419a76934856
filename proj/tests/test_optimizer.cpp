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

#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "qfp/optimizer.hpp"

using namespace qfp;
using testing::max_abs_diff;

namespace {

// Central finite differences of the smoothed objective with respect to
// the real and imaginary parts of one member entry, packed as a complex
// number. Works in the ambient (unretracted) matrix space.
Matrix finite_difference_gradient(const UnitaryFamily& family, const RealVector& lambda,
                                  double beta, int member, double h) {
  Matrix grad(family.n, family.n);
  for (int a = 0; a < family.n; ++a) {
    for (int b = 0; b < family.n; ++b) {
      double parts[2];
      for (int part = 0; part < 2; ++part) {
        const Complex delta = part == 0 ? Complex{h, 0.0} : Complex{0.0, h};
        UnitaryFamily plus = family;
        plus.members[member](a, b) += delta;
        UnitaryFamily minus = family;
        minus.members[member](a, b) -= delta;
        parts[part] = (smooth_objective(plus, lambda, beta).value -
                       smooth_objective(minus, lambda, beta).value) /
                      (2.0 * h);
      }
      grad(a, b) = Complex{parts[0], parts[1]};
    }
  }
  return grad;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("pairwise overlaps of a duplicated identity are all 1") {
  UnitaryFamily family;
  family.n = 2;
  family.members = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  const OverlapMatrix q = pairwise_overlaps(family, maximally_entangled_lambda(2));
  CHECK((q.array() - 1.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("pairwise overlaps of the pauli family vanish off the diagonal") {
  const OverlapMatrix q =
      pairwise_overlaps(weyl_heisenberg_family(2, 4), maximally_entangled_lambda(2));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x == y) {
        CHECK(q(x, y) == doctest::Approx(1.0).epsilon(1e-12));
      } else {
        CHECK(q(x, y) < 1e-12);
      }
    }
  }
}

TEST_CASE("pairwise overlaps match the protocol route on assembled schemes") {
  const UnitaryFamily family = testing::random_unitary_family(2, 3, 77);
  const RealVector lambda = maximally_entangled_lambda(2);
  const OverlapMatrix q = pairwise_overlaps(family, lambda);
  const FingerprintScheme scheme = assemble_scheme(family, lambda);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(std::abs(q(x, y) - acceptance_probability_reduced(scheme, x, y)) < 1e-10);
    }
  }
}

TEST_CASE("pairwise overlaps reject bad spectra and shapes") {
  UnitaryFamily family = testing::random_unitary_family(2, 2, 5);
  CHECK_THROWS_AS(pairwise_overlaps(family, maximally_entangled_lambda(3)),
                  DimensionError);
  RealVector unnormalized = RealVector::Constant(2, 0.9);
  CHECK_THROWS_AS(pairwise_overlaps(family, unnormalized), NormalizationError);
}

TEST_CASE("smoothed maximum of equal overlaps is the softmax constant") {
  UnitaryFamily family;
  family.n = 2;
  family.members = {Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                    Matrix::Identity(2, 2)};
  const double beta = 37.0;
  const SmoothObjective obj =
      smooth_objective(family, maximally_entangled_lambda(2), beta);
  CHECK(obj.value == doctest::Approx(1.0 + std::log(3.0) / beta).epsilon(1e-12));
}

TEST_CASE("smoothed maximum upper-bounds the true maximum tightly") {
  const UnitaryFamily family = testing::random_unitary_family(2, 4, 11);
  const RealVector lambda = maximally_entangled_lambda(2);
  const OverlapMatrix q = pairwise_overlaps(family, lambda);
  double true_max = 0.0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x != y) true_max = std::max(true_max, q(x, y));
    }
  }
  const double pairs = 6.0;
  for (double beta : {10.0, 100.0, 1e6}) {
    const double value = smooth_objective(family, lambda, beta).value;
    CHECK(value >= true_max - 1e-12);
    CHECK(value - true_max <= std::log(pairs) / beta + 1e-12);
  }
  CHECK(std::abs(smooth_objective(family, lambda, 1e6).value - true_max) < 1e-5);
}

TEST_CASE("analytic gradient matches central finite differences") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const int m = 3;
    const UnitaryFamily family = testing::random_unitary_family(n, m, seed + 60);
    const RealVector lambda = seed % 2 == 0 ? RealVector(maximally_entangled_lambda(n))
                                            : testing::random_lambda(n, seed);
    const double beta = 25.0;
    const SmoothObjective obj = smooth_objective(family, lambda, beta);
    for (int member = 0; member < m; ++member) {
      const Matrix fd = finite_difference_gradient(family, lambda, beta, member, 1e-6);
      CHECK(max_abs_diff(fd, obj.gradient[member]) < 1e-5);
    }
  }
}

TEST_CASE("retraction is idempotent on unitaries") {
  const Matrix u = haar_random_unitary(3, 21);
  CHECK(max_abs_diff(retract_to_unitary(u), u) < 1e-12);
}

TEST_CASE("retraction collapses scaled identities") {
  CHECK(max_abs_diff(retract_to_unitary(2.0 * Matrix::Identity(2, 2)),
                     Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("retraction maximizes the real trace alignment over unitaries") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss;
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
  }
  const Matrix p = retract_to_unitary(m);
  CHECK(is_unitary(p, 1e-10));
  const Complex alignment = trace_inner_product(p, m);
  CHECK(std::abs(alignment.imag()) < 1e-10);
  CHECK(alignment.real() >= 0.0);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Matrix w = haar_random_unitary(3, seed + 9000);
    CHECK(trace_inner_product(w, m).real() <= alignment.real() + 1e-9);
  }
}

TEST_CASE("retraction rejects singular input") {
  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(retract_to_unitary(singular), RankError);
  CHECK_THROWS_AS(retract_to_unitary(Matrix::Zero(3, 2)), DimensionError);
}

TEST_CASE("weyl-heisenberg initialization is already optimal for the square count") {
  OptimizerConfig config;
  config.m = 4;
  config.n = 2;
  config.max_iterations = 50;
  config.init = InitStrategy::kWeylHeisenberg;
  const FrameSolution solution = optimize(config);
  REQUIRE_FALSE(solution.trace.empty());
  CHECK(solution.trace.front().coherence <= 1e-9);
  CHECK(solution.coherence <= 1e-9);
}

TEST_CASE("two unitaries can always be made orthogonal") {
  // the target is feasible: {I, Z} already has zero overlap
  const OverlapMatrix witness =
      pairwise_overlaps(weyl_heisenberg_family(2, 2), maximally_entangled_lambda(2));
  CHECK(witness(0, 1) < 1e-12);

  for (int n : {2, 3}) {
    OptimizerConfig config;
    config.m = 2;
    config.n = n;
    config.max_iterations = 3000;
    config.seed = 5;
    config.stop_gap = 1e-7;
    const FrameSolution solution = optimize(config);
    CHECK(solution.coherence <= 1e-6);
  }
}

TEST_CASE("the five-in-four search respects the bound floor and gets close") {
  OptimizerConfig config;
  config.m = 5;
  config.n = 2;
  config.max_iterations = 5000;
  config.seed = 7;
  const FrameSolution solution = optimize(config);
  CHECK(solution.coherence >= 1.0 / 16 - 1e-9);
  CHECK(solution.coherence <= 2.0 / 16);
}

TEST_CASE("optimization is deterministic in its config") {
  OptimizerConfig config;
  config.m = 4;
  config.n = 2;
  config.max_iterations = 300;
  config.seed = 13;
  const FrameSolution a = optimize(config);
  const FrameSolution b = optimize(config);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].iteration == b.trace[i].iteration);
    CHECK(a.trace[i].coherence == b.trace[i].coherence);  // bit identical
  }
  for (int x = 0; x < config.m; ++x) {
    CHECK(a.bob_ops.members[x] == b.bob_ops.members[x]);
  }
}

TEST_CASE("solutions are self-consistent and stay on the manifold") {
  OptimizerConfig config;
  config.m = 4;
  config.n = 3;
  config.max_iterations = 400;
  config.seed = 2;
  const FrameSolution solution = optimize(config);

  for (const Matrix& member : solution.bob_ops.members) {
    CHECK(is_unitary(member, 1e-8));
  }
  const OverlapMatrix q =
      pairwise_overlaps(solution.bob_ops, maximally_entangled_lambda(config.n));
  double max_off = 0.0;
  for (int x = 0; x < config.m; ++x) {
    for (int y = 0; y < config.m; ++y) {
      if (x != y) max_off = std::max(max_off, q(x, y));
    }
  }
  CHECK(std::abs(solution.coherence - max_off) <= 1e-12);
  CHECK(solution.coherence >= solution.bound.raw_bound - 1e-9);
}

TEST_CASE("the best-seen envelope of the trace is non-increasing") {
  OptimizerConfig config;
  config.m = 5;
  config.n = 2;
  config.max_iterations = 600;
  config.seed = 19;
  const FrameSolution solution = optimize(config);
  double best = solution.trace.front().coherence;
  double previous_best = best;
  for (const TraceSample& sample : solution.trace) {
    best = std::min(best, sample.coherence);
    CHECK(best <= previous_best);
    previous_best = best;
  }
  CHECK(best == solution.coherence);
}

TEST_CASE("stall detection terminates a converged run early") {
  OptimizerConfig config;
  config.m = 4;
  config.n = 2;
  config.max_iterations = 5000;
  config.init = InitStrategy::kWeylHeisenberg;
  config.stop_stall = 25;
  const FrameSolution solution = optimize(config);
  CHECK(solution.trace.size() < 5000);
}

TEST_CASE("optimizer rejects broken configs") {
  OptimizerConfig config;
  config.m = 1;
  CHECK_THROWS_AS(optimize(config), RangeError);
  config.m = 3;
  config.step_size = 0.0;
  CHECK_THROWS_AS(optimize(config), RangeError);
  config.step_size = 0.05;
  config.smoothing_beta = -1.0;
  CHECK_THROWS_AS(optimize(config), RangeError);
}

}  // TEST_SUITE
