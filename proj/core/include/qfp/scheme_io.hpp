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

#include <filesystem>
#include <string>
#include <vector>

#include "qfp/optimizer.hpp"
#include "qfp/protocol.hpp"

namespace qfp {

/// Thrown when a scheme document is malformed: JSON syntax errors,
/// missing or mistyped keys, wrong array shapes. Violations of numeric
/// invariants surface as the usual typed errors instead.
struct SchemeParseError : Error {
  using Error::Error;
};

/// A scheme plus the optional label carried by the file format.
struct SchemeDocument {
  FingerprintScheme scheme;
  std::string label;
};

/// Serializes a scheme to the canonical JSON document: keys in the
/// fixed order n, m, lambda, alice_ops, bob_ops, alpha, label (label
/// omitted when empty); complex entries as [re, im] pairs; alpha
/// flattened row-major. Numbers render in shortest round-trip form, so
/// write -> read -> write is byte stable.
std::string to_json(const FingerprintScheme& scheme, const std::string& label = {});

/// Parses a scheme document. Shape and type problems raise
/// SchemeParseError; an unnormalized alpha raises NormalizationError.
SchemeDocument from_json(const std::string& text);

void write_scheme_file(const std::filesystem::path& path,
                       const FingerprintScheme& scheme, const std::string& label = {});
SchemeDocument read_scheme_file(const std::filesystem::path& path);

/// CSV trace with header "iteration,coherence", one row per sample,
/// coherence printed with 17 significant digits.
void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceSample>& trace);

}  // namespace qfp
