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

#include "qfp/scheme_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace qfp {
namespace {

using Json = nlohmann::ordered_json;

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemeParseError("complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw SchemeParseError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SchemeParseError(std::string(what) + ": expected " + std::to_string(n) +
                             " entries per row");
    }
    for (int k = 0; k < n; ++k) {
      m(i, k) = complex_from_json(row[k]);
    }
  }
  return m;
}

int require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw SchemeParseError(std::string("missing or non-integer key \"") + key + "\"");
  }
  return doc[key].get<int>();
}

}  // namespace

std::string to_json(const FingerprintScheme& scheme, const std::string& label) {
  Json doc;
  doc["n"] = scheme.n;
  doc["m"] = scheme.m;
  Json lambda = Json::array();
  for (Eigen::Index i = 0; i < scheme.lambda.size(); ++i) {
    lambda.push_back(scheme.lambda(i));
  }
  doc["lambda"] = std::move(lambda);
  Json alice = Json::array();
  for (const Matrix& u : scheme.alice_ops) alice.push_back(matrix_to_json(u));
  doc["alice_ops"] = std::move(alice);
  Json bob = Json::array();
  for (const Matrix& v : scheme.bob_ops) bob.push_back(matrix_to_json(v));
  doc["bob_ops"] = std::move(bob);
  Json alpha = Json::array();
  const Matrix& a = scheme.alpha.amplitudes();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      alpha.push_back(complex_to_json(a(i, j)));
    }
  }
  doc["alpha"] = std::move(alpha);
  if (!label.empty()) {
    doc["label"] = label;
  }
  return doc.dump(2) + "\n";
}

SchemeDocument from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemeParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SchemeParseError("scheme document must be a JSON object");
  }

  const int n = require_int(doc, "n");
  const int m = require_int(doc, "m");
  if (n < 1) throw SchemeParseError("\"n\" must be at least 1");
  if (m < 2) throw SchemeParseError("\"m\" must be at least 2");

  if (!doc.contains("lambda") || !doc["lambda"].is_array() || doc["lambda"].empty() ||
      static_cast<int>(doc["lambda"].size()) > n) {
    throw SchemeParseError("\"lambda\" must be an array of 1..n numbers");
  }
  RealVector lambda(doc["lambda"].size());
  for (std::size_t i = 0; i < doc["lambda"].size(); ++i) {
    if (!doc["lambda"][i].is_number()) {
      throw SchemeParseError("\"lambda\" entries must be numbers");
    }
    lambda(static_cast<Eigen::Index>(i)) = doc["lambda"][i].get<double>();
  }

  auto read_family = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_array() ||
        static_cast<int>(doc[key].size()) != m) {
      throw SchemeParseError(std::string("\"") + key + "\" must be an array of m matrices");
    }
    std::vector<Matrix> ops;
    ops.reserve(m);
    for (int x = 0; x < m; ++x) {
      ops.push_back(matrix_from_json(doc[key][x], n, key));
    }
    return ops;
  };
  std::vector<Matrix> alice_ops = read_family("alice_ops");
  std::vector<Matrix> bob_ops = read_family("bob_ops");

  if (!doc.contains("alpha") || !doc["alpha"].is_array() ||
      static_cast<int>(doc["alpha"].size()) != n * n) {
    throw SchemeParseError("\"alpha\" must be a flattened array of n*n entries");
  }
  Matrix alpha_matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      alpha_matrix(i, j) = complex_from_json(doc["alpha"][i * n + j]);
    }
  }

  // Built before the aggregate so a normalization throw here cannot
  // leave a partially constructed scheme behind.
  BipartiteState alpha(std::move(alpha_matrix));
  SchemeDocument result{FingerprintScheme{n, m, std::move(lambda), std::move(alice_ops),
                                          std::move(bob_ops), std::move(alpha)},
                        {}};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      throw SchemeParseError("\"label\" must be a string");
    }
    result.label = doc["label"].get<std::string>();
  }
  return result;
}

void write_scheme_file(const std::filesystem::path& path,
                       const FingerprintScheme& scheme, const std::string& label) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << to_json(scheme, label);
}

SchemeDocument read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SchemeParseError("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceSample>& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << "iteration,coherence\n";
  char line[64];
  for (const TraceSample& sample : trace) {
    std::snprintf(line, sizeof(line), "%d,%.17g\n", sample.iteration, sample.coherence);
    out << line;
  }
}

}  // namespace qfp
