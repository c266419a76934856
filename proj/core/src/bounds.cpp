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

#include "qfp/bounds.hpp"

#include <algorithm>

namespace qfp {

BoundReport welch_lower_bound(int m, int schmidt_number) {
  if (m < 2) {
    throw DomainError("welch_lower_bound: needs m >= 2 distinct messages");
  }
  if (schmidt_number < 1) {
    throw DomainError("welch_lower_bound: Schmidt number must be at least 1");
  }
  BoundReport report;
  report.m = m;
  report.schmidt_number = schmidt_number;
  const double dim = static_cast<double>(schmidt_number) * schmidt_number;
  report.raw_bound = (static_cast<double>(m) - dim) / (dim * (m - 1.0));
  report.effective_bound = std::max(report.raw_bound, 0.0);
  return report;
}

BoundReport gap_report(const FingerprintScheme& scheme, double validation_tol) {
  const WorstCaseReport wce = worst_case_error(scheme, validation_tol);
  BoundReport report =
      welch_lower_bound(scheme.m, static_cast<int>(scheme.lambda.size()));
  report.achieved = wce.p_wce;
  report.gap = wce.p_wce - report.effective_bound;
  return report;
}

}  // namespace qfp
