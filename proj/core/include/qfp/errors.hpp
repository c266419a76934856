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

#include <stdexcept>

namespace qfp {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix or state shapes do not satisfy an operation's contract.
struct DimensionError : Error {
  using Error::Error;
};

/// A state or Schmidt coefficient vector is not normalized.
struct NormalizationError : Error {
  using Error::Error;
};

/// An index or size parameter lies outside its allowed range.
struct RangeError : Error {
  using Error::Error;
};

/// A parameter combination is outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// An operator that must be invertible is rank deficient.
struct RankError : Error {
  using Error::Error;
};

/// The constraint equation admits no unitary solution.
struct NoUnitarySolutionError : Error {
  using Error::Error;
};

/// A scheme failed the one-sided-error validation required here.
struct ValidationError : Error {
  using Error::Error;
};

/// The requested configuration is not supported.
struct UnsupportedConfigError : Error {
  using Error::Error;
};

}  // namespace qfp
