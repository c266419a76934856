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

#include <benchmark/benchmark.h>

#include "qfp/bounds.hpp"
#include "qfp/constructions.hpp"
#include "qfp/optimizer.hpp"
#include "qfp/protocol.hpp"

namespace {

using namespace qfp;

UnitaryFamily haar_family(int n, int m) {
  UnitaryFamily family;
  family.n = n;
  family.members.reserve(m);
  for (int x = 0; x < m; ++x) {
    family.members.push_back(haar_random_unitary(n, 1000 + x));
  }
  return family;
}

void BM_Kron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix a = haar_random_unitary(n, 1);
  const Matrix b = haar_random_unitary(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SchmidtDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix u = haar_random_unitary(n, 3);
  BipartiteState psi(u / u.norm());
  for (auto _ : state) {
    benchmark::DoNotOptimize(schmidt_decompose(psi));
  }
}
BENCHMARK(BM_SchmidtDecompose)->Arg(2)->Arg(4)->Arg(8);

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_random_unitary(n, seed++));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(8);

void BM_AcceptanceDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FingerprintScheme scheme =
      assemble_scheme(haar_family(n, 3), maximally_entangled_lambda(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(acceptance_probability_direct(scheme, 0, 1));
  }
}
BENCHMARK(BM_AcceptanceDirect)->Arg(2)->Arg(4)->Arg(8);

void BM_AcceptanceReduced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FingerprintScheme scheme =
      assemble_scheme(haar_family(n, 3), maximally_entangled_lambda(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(acceptance_probability_reduced(scheme, 0, 1));
  }
}
BENCHMARK(BM_AcceptanceReduced)->Arg(2)->Arg(4)->Arg(8);

void BM_PairwiseOverlaps(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const UnitaryFamily family = haar_family(3, m);
  const RealVector lambda = maximally_entangled_lambda(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_overlaps(family, lambda));
  }
}
BENCHMARK(BM_PairwiseOverlaps)->Arg(4)->Arg(8)->Arg(16);

void BM_SmoothObjective(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const UnitaryFamily family = haar_family(3, m);
  const RealVector lambda = maximally_entangled_lambda(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_objective(family, lambda, 100.0));
  }
}
BENCHMARK(BM_SmoothObjective)->Arg(4)->Arg(8)->Arg(16);

void BM_Retraction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = haar_random_unitary(n, 5) + 0.05 * haar_random_unitary(n, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(retract_to_unitary(m));
  }
}
BENCHMARK(BM_Retraction)->Arg(2)->Arg(4)->Arg(8);

void BM_OptimizeSmall(benchmark::State& state) {
  OptimizerConfig config;
  config.m = 5;
  config.n = 2;
  config.max_iterations = static_cast<int>(state.range(0));
  config.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize(config));
  }
}
BENCHMARK(BM_OptimizeSmall)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
