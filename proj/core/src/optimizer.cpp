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

#include "qfp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qfp {
namespace {

constexpr int kBetaGrowthPeriod = 200;
constexpr double kStallImprovement = 1e-12;
constexpr double kMinStep = 1e-14;

void check_family_shapes(const UnitaryFamily& family, const RealVector& lambda) {
  if (lambda.size() < 1 || lambda.size() > family.n) {
    throw DimensionError("unitary family: lambda length must lie in [1, n]");
  }
  if (std::abs(lambda.squaredNorm() - 1.0) > kStateNormTolerance) {
    throw NormalizationError("unitary family: lambda must have unit square sum");
  }
  for (const Matrix& member : family.members) {
    if (member.rows() != family.n || member.cols() != family.n) {
      throw DimensionError("unitary family: member shape does not match the family dimension");
    }
  }
}

// tr(K^2 V_x^dagger V_y) = sum_i lambda_i^2 <v_{x,i}|v_{y,i}>, the
// complex overlap whose squared magnitude is the acceptance probability.
Complex pair_overlap(const Matrix& vx, const Matrix& vy, const RealVector& lambda_sq) {
  Complex c{0.0, 0.0};
  for (Eigen::Index i = 0; i < lambda_sq.size(); ++i) {
    c += lambda_sq(i) * vx.col(i).dot(vy.col(i));
  }
  return c;
}

double max_off_diagonal(const OverlapMatrix& q) {
  double best = 0.0;
  for (Eigen::Index x = 0; x < q.rows(); ++x) {
    for (Eigen::Index y = 0; y < q.cols(); ++y) {
      if (x != y) best = std::max(best, q(x, y));
    }
  }
  return best;
}

UnitaryFamily initial_family(const OptimizerConfig& config) {
  if (config.init == InitStrategy::kWeylHeisenberg) {
    UnitaryFamily family = weyl_heisenberg_family(config.n, config.m);
    family.label = "optimizer:weyl-heisenberg-init";
    return family;
  }
  UnitaryFamily family;
  family.n = config.n;
  family.label = "optimizer:haar-init";
  family.members.reserve(config.m);
  for (int x = 0; x < config.m; ++x) {
    // Distinct per-member seeds derived from the config seed keep the
    // whole run reproducible.
    family.members.push_back(
        haar_random_unitary(config.n, config.seed * 0x9e3779b97f4a7c15ULL + x));
  }
  return family;
}

}  // namespace

OverlapMatrix pairwise_overlaps(const UnitaryFamily& family, const RealVector& lambda) {
  check_family_shapes(family, lambda);
  const int m = static_cast<int>(family.members.size());
  const RealVector lambda_sq = lambda.array().square();
  OverlapMatrix q(m, m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      q(x, y) = std::norm(pair_overlap(family.members[x], family.members[y], lambda_sq));
    }
  }
  return q;
}

SmoothObjective smooth_objective(const UnitaryFamily& family,
                                 const RealVector& lambda, double beta) {
  if (beta <= 0.0) {
    throw RangeError("smooth_objective: beta must be positive");
  }
  check_family_shapes(family, lambda);
  const int m = static_cast<int>(family.members.size());
  if (m < 2) {
    throw RangeError("smooth_objective: needs at least two members");
  }
  const RealVector lambda_sq = lambda.array().square();

  struct PairTerm {
    int x;
    int y;
    Complex c;
    double q;
  };
  std::vector<PairTerm> pairs;
  pairs.reserve(m * (m - 1) / 2);
  double q_max = -std::numeric_limits<double>::infinity();
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      const Complex c = pair_overlap(family.members[x], family.members[y], lambda_sq);
      pairs.push_back({x, y, c, std::norm(c)});
      q_max = std::max(q_max, std::norm(c));
    }
  }

  double exp_sum = 0.0;
  for (const PairTerm& p : pairs) {
    exp_sum += std::exp(beta * (p.q - q_max));
  }

  SmoothObjective result;
  result.value = q_max + std::log(exp_sum) / beta;
  result.gradient.assign(m, Matrix::Zero(family.n, family.n));
  for (const PairTerm& p : pairs) {
    const double weight = std::exp(beta * (p.q - q_max)) / exp_sum;
    // d q / d conj(V_x) = conj(c) V_y K^2 and symmetrically for V_y;
    // the factor 2 converts to the packed d/dRe + i d/dIm gradient.
    const Matrix vy_k = family.members[p.y] * lambda_sq.asDiagonal();
    const Matrix vx_k = family.members[p.x] * lambda_sq.asDiagonal();
    result.gradient[p.x] += (2.0 * weight * std::conj(p.c)) * vy_k;
    result.gradient[p.y] += (2.0 * weight * p.c) * vx_k;
  }
  return result;
}

Matrix retract_to_unitary(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("retract_to_unitary: matrix must be square");
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sigma = svd.singularValues();
  if (sigma(0) <= 0.0 || sigma(sigma.size() - 1) <= sigma(0) * 1e-13) {
    throw RankError("retract_to_unitary: matrix is numerically singular");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

FrameSolution optimize(const OptimizerConfig& config) {
  if (config.m < 2) throw RangeError("optimize: m must be at least 2");
  if (config.n < 1) throw RangeError("optimize: n must be at least 1");
  if (config.step_size <= 0.0) throw RangeError("optimize: step size must be positive");
  if (config.smoothing_beta <= 0.0) throw RangeError("optimize: beta must be positive");
  if (config.beta_growth < 1.0) throw RangeError("optimize: beta growth must be >= 1");
  if (config.max_iterations < 0) throw RangeError("optimize: iteration budget must be nonnegative");

  const RealVector lambda =
      config.lambda.size() > 0 ? config.lambda : maximally_entangled_lambda(config.n);

  UnitaryFamily family = initial_family(config);
  check_family_shapes(family, lambda);

  FrameSolution solution;
  solution.bound = welch_lower_bound(config.m, static_cast<int>(lambda.size()));
  solution.coherence = std::numeric_limits<double>::infinity();

  double step = config.step_size;
  int stall_count = 0;

  for (int iteration = 0;; ++iteration) {
    const double coherence = max_off_diagonal(pairwise_overlaps(family, lambda));
    solution.trace.push_back({iteration, coherence});
    if (coherence < solution.coherence - kStallImprovement) {
      stall_count = 0;
    } else {
      ++stall_count;
    }
    if (coherence < solution.coherence) {
      solution.coherence = coherence;
      solution.bob_ops = family;
    }

    if (solution.coherence <=
        (1.0 + config.stop_gap) * solution.bound.effective_bound) {
      break;
    }
    if (config.stop_stall > 0 && stall_count >= config.stop_stall) {
      break;
    }
    if (iteration >= config.max_iterations) {
      break;
    }

    const double beta =
        config.smoothing_beta *
        std::pow(config.beta_growth, static_cast<double>(iteration / kBetaGrowthPeriod));
    const SmoothObjective objective = smooth_objective(family, lambda, beta);

    // Fixed step with halving on increase; no full line search.
    for (;;) {
      UnitaryFamily candidate = family;
      for (int x = 0; x < config.m; ++x) {
        candidate.members[x] =
            retract_to_unitary(family.members[x] - step * objective.gradient[x]);
      }
      const double candidate_value = smooth_objective(candidate, lambda, beta).value;
      if (candidate_value <= objective.value || step < kMinStep) {
        family = std::move(candidate);
        break;
      }
      step *= 0.5;
    }
    solution.iterations_used = iteration + 1;
  }

  return solution;
}

}  // namespace qfp
