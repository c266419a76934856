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

#include "qfp/protocol.hpp"

namespace qfp {

/// Welch lower bound on the worst-case error probability, with the gap
/// to an achieved value when one is attached.
///
/// raw_bound = (m - N_s^2) / (N_s^2 (m - 1)) and is negative (vacuous)
/// for m < N_s^2; effective_bound clamps it at 0.
struct BoundReport {
  int m = 0;
  int schmidt_number = 0;
  double raw_bound = 0.0;
  double effective_bound = 0.0;
  std::optional<double> achieved;
  std::optional<double> gap;
};

/// Bound for m messages and Schmidt number schmidt_number; no scheme
/// attached. m must be at least 2 for the max over distinct pairs to
/// exist.
BoundReport welch_lower_bound(int m, int schmidt_number);

/// Bound report for a concrete scheme: achieved = worst-case error,
/// Schmidt number read off the scheme's lambda length, gap populated
/// against the effective bound.
BoundReport gap_report(const FingerprintScheme& scheme,
                       double validation_tol = kValidationTolerance);

}  // namespace qfp
