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

// Command-line front end. Exit codes are a stable contract for
// scripting: 0 success (and "scheme valid"), 1 semantic failure
// (invalid scheme, no unitary solution, ...), 2 usage or parse errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfp/bounds.hpp"
#include "qfp/constructions.hpp"
#include "qfp/optimizer.hpp"
#include "qfp/protocol.hpp"
#include "qfp/scheme_io.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct BoundRow {
  int m;
  int ns;
  double raw;
  double effective;
};

void print_bound_rows(const std::vector<BoundRow>& rows, const std::string& format) {
  if (format == "json") {
    Json out = Json::array();
    for (const BoundRow& r : rows) {
      out.push_back({{"m", r.m},
                     {"ns", r.ns},
                     {"raw_bound", r.raw},
                     {"effective_bound", r.effective}});
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "m,ns,raw_bound,effective_bound\n";
    for (const BoundRow& r : rows) {
      std::cout << r.m << "," << r.ns << "," << fmt(r.raw) << "," << fmt(r.effective)
                << "\n";
    }
    return;
  }
  std::printf("%6s %6s %24s %24s\n", "m", "ns", "raw_bound", "effective_bound");
  for (const BoundRow& r : rows) {
    std::printf("%6d %6d %24s %24s\n", r.m, r.ns, fmt(r.raw).c_str(),
                fmt(r.effective).c_str());
  }
}

int run_bound(std::optional<int> m, std::optional<std::pair<int, int>> m_range, int ns,
              const std::string& format) {
  std::vector<BoundRow> rows;
  if (m_range) {
    for (int mm = m_range->first; mm <= m_range->second; ++mm) {
      const qfp::BoundReport b = qfp::welch_lower_bound(mm, ns);
      rows.push_back({mm, ns, b.raw_bound, b.effective_bound});
    }
  } else {
    const qfp::BoundReport b = qfp::welch_lower_bound(*m, ns);
    rows.push_back({*m, ns, b.raw_bound, b.effective_bound});
  }
  print_bound_rows(rows, format);
  return 0;
}

int run_validate(const std::string& file, double tol, const std::string& format) {
  const qfp::SchemeDocument doc = qfp::read_scheme_file(file);
  if (const auto violation = qfp::scheme_invariant_violation(doc.scheme)) {
    std::cout << "invalid scheme: " << *violation << "\n";
    return 1;
  }
  const qfp::ValidationReport report = qfp::validate_one_sided(doc.scheme, tol);
  if (format == "json") {
    Json out{{"file", file},
             {"tol", tol},
             {"is_valid", report.is_valid},
             {"max_diagonal_deviation", report.max_diagonal_deviation},
             {"max_constancy_deviation", report.max_constancy_deviation}};
    if (report.offending_message) out["offending_message"] = *report.offending_message;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (report.is_valid ? "valid" : "INVALID") << " (tol " << fmt(tol)
              << ")\n"
              << "max diagonal deviation:  " << fmt(report.max_diagonal_deviation)
              << "\n"
              << "max constancy deviation: " << fmt(report.max_constancy_deviation)
              << "\n";
    if (report.offending_message) {
      std::cout << "offending message:       " << *report.offending_message << "\n";
    }
  }
  return report.is_valid ? 0 : 1;
}

struct PairRow {
  int x;
  int y;
  double direct;
  double reduced;
  double diff;
};

PairRow simulate_pair(const qfp::FingerprintScheme& scheme, int x, int y) {
  const double direct = qfp::acceptance_probability_direct(scheme, x, y);
  const double reduced = qfp::acceptance_probability_reduced(scheme, x, y);
  return {x, y, direct, reduced, std::abs(direct - reduced)};
}

int run_simulate(const std::string& file, std::optional<int> x, std::optional<int> y,
                 bool all_pairs, const std::string& format) {
  const qfp::SchemeDocument doc = qfp::read_scheme_file(file);
  if (const auto violation = qfp::scheme_invariant_violation(doc.scheme)) {
    std::cerr << "error: invalid scheme: " << *violation << "\n";
    return 1;
  }
  const qfp::FingerprintScheme& scheme = doc.scheme;

  std::vector<PairRow> rows;
  std::optional<qfp::WorstCaseReport> wce;
  if (all_pairs) {
    for (int xx = 0; xx < scheme.m; ++xx) {
      for (int yy = 0; yy < scheme.m; ++yy) {
        rows.push_back(simulate_pair(scheme, xx, yy));
      }
    }
    wce = qfp::worst_case_error(scheme);
  } else {
    rows.push_back(simulate_pair(scheme, *x, *y));
  }
  double max_diff = 0.0;
  for (const PairRow& r : rows) max_diff = std::max(max_diff, r.diff);

  if (format == "json") {
    Json pairs = Json::array();
    for (const PairRow& r : rows) {
      pairs.push_back({{"x", r.x},
                       {"y", r.y},
                       {"direct", r.direct},
                       {"reduced", r.reduced},
                       {"abs_diff", r.diff}});
    }
    Json out{{"file", file}, {"pairs", pairs}, {"max_abs_diff", max_diff}};
    if (wce) {
      out["p_wce"] = wce->p_wce;
      out["argmax_pair"] = {wce->argmax_pair.first, wce->argmax_pair.second};
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "x,y,direct,reduced,abs_diff\n";
    for (const PairRow& r : rows) {
      std::cout << r.x << "," << r.y << "," << fmt(r.direct) << "," << fmt(r.reduced)
                << "," << fmt(r.diff) << "\n";
    }
    std::cout << "# max_abs_diff=" << fmt(max_diff) << "\n";
    if (wce) {
      std::cout << "# p_wce=" << fmt(wce->p_wce) << "\n# argmax_pair="
                << wce->argmax_pair.first << "," << wce->argmax_pair.second << "\n";
    }
  } else {
    std::printf("%4s %4s %22s %22s %12s\n", "x", "y", "direct", "reduced", "abs_diff");
    for (const PairRow& r : rows) {
      std::printf("%4d %4d %22s %22s %12.3e\n", r.x, r.y, fmt(r.direct).c_str(),
                  fmt(r.reduced).c_str(), r.diff);
    }
    std::cout << "max |direct - reduced| = " << fmt(max_diff) << "\n";
    if (wce) {
      std::cout << "p_wce = " << fmt(wce->p_wce) << " at pair ("
                << wce->argmax_pair.first << ", " << wce->argmax_pair.second << ")\n";
    }
  }
  return 0;
}

int run_construct(const std::string& family, int d, int m, const std::string& out_file) {
  const qfp::UnitaryFamily bob = qfp::weyl_heisenberg_family(d, m);
  const qfp::FingerprintScheme scheme =
      qfp::assemble_scheme(bob, qfp::maximally_entangled_lambda(d));
  const std::string label =
      family + " d=" + std::to_string(d) + " m=" + std::to_string(m);
  qfp::write_scheme_file(out_file, scheme, label);
  const qfp::WorstCaseReport wce = qfp::worst_case_error(scheme);
  std::cout << "wrote " << out_file << " (" << label << ")\n"
            << "p_wce = " << fmt(wce.p_wce) << "\n";
  return 0;
}

int run_optimize(const qfp::OptimizerConfig& config, const std::string& out_file,
                 const std::string& trace_file, const std::string& format,
                 const std::string& init_name) {
  const qfp::FrameSolution solution = qfp::optimize(config);
  const qfp::FingerprintScheme scheme = qfp::assemble_scheme(
      solution.bob_ops, qfp::maximally_entangled_lambda(config.n));
  const double gap = solution.coherence - solution.bound.effective_bound;

  if (!out_file.empty()) {
    qfp::write_scheme_file(out_file, scheme,
                           "optimized m=" + std::to_string(config.m) +
                               " n=" + std::to_string(config.n) +
                               " seed=" + std::to_string(config.seed));
  }
  if (!trace_file.empty()) {
    qfp::write_trace_csv(trace_file, solution.trace);
  }

  if (format == "json") {
    Json trace = Json::array();
    for (const qfp::TraceSample& s : solution.trace) {
      trace.push_back({{"iteration", s.iteration}, {"coherence", s.coherence}});
    }
    Json out{{"m", config.m},
             {"n", config.n},
             {"iterations", config.max_iterations},
             {"seed", config.seed},
             {"init", init_name},
             {"beta", config.smoothing_beta},
             {"beta_growth", config.beta_growth},
             {"step", config.step_size},
             {"coherence", solution.coherence},
             {"raw_bound", solution.bound.raw_bound},
             {"effective_bound", solution.bound.effective_bound},
             {"gap", gap},
             {"iterations_used", solution.iterations_used},
             {"trace", trace}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "coherence       = " << fmt(solution.coherence) << "\n"
              << "raw bound       = " << fmt(solution.bound.raw_bound) << "\n"
              << "effective bound = " << fmt(solution.bound.effective_bound) << "\n"
              << "gap             = " << fmt(gap) << "\n"
              << "iterations used = " << solution.iterations_used << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shared-entanglement quantum fingerprinting laboratory"};
  app.require_subcommand(1);
  int rc = 0;

  // bound
  auto* bound = app.add_subcommand("bound", "Welch lower bound on worst-case error");
  std::optional<int> bound_m;
  std::string bound_range;
  int bound_ns = 0;
  std::string bound_format = "table";
  bound->add_option("--m", bound_m, "message count (m >= 2)");
  bound->add_option("--m-range", bound_range, "inclusive range A:B of message counts");
  bound->add_option("--ns", bound_ns, "Schmidt number")->required()->check(CLI::PositiveNumber);
  bound->add_option("--format", bound_format)->check(CLI::IsMember({"json", "csv", "table"}));
  bound->callback([&] {
    std::optional<std::pair<int, int>> range;
    if (!bound_range.empty()) {
      const auto colon = bound_range.find(':');
      int a = 0, b = 0;
      if (colon == std::string::npos ||
          std::sscanf(bound_range.c_str(), "%d:%d", &a, &b) != 2 || a > b) {
        throw CLI::ValidationError("--m-range must have the form A:B with A <= B");
      }
      range = {a, b};
    }
    if (bound_m.has_value() == range.has_value()) {
      throw CLI::ValidationError("exactly one of --m and --m-range is required");
    }
    if ((bound_m && *bound_m < 2) || (range && range->first < 2)) {
      throw CLI::ValidationError("message count must be at least 2");
    }
    rc = run_bound(bound_m, range, bound_ns, bound_format);
  });

  // validate
  auto* validate = app.add_subcommand("validate", "check the one-sided-error constraint");
  std::string validate_file;
  double validate_tol = 1e-9;
  std::string validate_format = "table";
  validate->add_option("file", validate_file, "scheme JSON file")->required();
  validate->add_option("--tol", validate_tol, "validation tolerance")
      ->check(CLI::PositiveNumber);
  validate->add_option("--format", validate_format)
      ->check(CLI::IsMember({"json", "table"}));
  validate->callback([&] { rc = run_validate(validate_file, validate_tol, validate_format); });

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "acceptance probabilities by direct and reduced routes");
  std::string simulate_file;
  std::optional<int> sim_x, sim_y;
  bool sim_all = false;
  std::string simulate_format = "table";
  simulate->add_option("file", simulate_file, "scheme JSON file")->required();
  simulate->add_option("--x", sim_x, "Alice's message index");
  simulate->add_option("--y", sim_y, "Bob's message index");
  simulate->add_flag("--all-pairs", sim_all, "evaluate every (x, y) pair");
  simulate->add_option("--format", simulate_format)
      ->check(CLI::IsMember({"json", "csv", "table"}));
  simulate->callback([&] {
    if (!sim_all && (!sim_x || !sim_y)) {
      throw CLI::ValidationError("provide --x and --y, or --all-pairs");
    }
    if (sim_all && (sim_x || sim_y)) {
      throw CLI::ValidationError("--all-pairs excludes --x/--y");
    }
    if (!sim_all) {
      // Range errors on indices are usage errors; check before running.
      const qfp::SchemeDocument doc = qfp::read_scheme_file(simulate_file);
      if (*sim_x < 0 || *sim_x >= doc.scheme.m || *sim_y < 0 || *sim_y >= doc.scheme.m) {
        throw CLI::ValidationError("--x/--y must lie in [0, m)");
      }
    }
    rc = run_simulate(simulate_file, sim_x, sim_y, sim_all, simulate_format);
  });

  // construct
  auto* construct = app.add_subcommand("construct", "canonical scheme constructions");
  std::string construct_family = "weyl-heisenberg";
  int construct_d = 0;
  int construct_m = 0;
  std::string construct_out;
  construct->add_option("--family", construct_family)
      ->check(CLI::IsMember({"weyl-heisenberg"}));
  construct->add_option("--d", construct_d, "subsystem dimension")->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--m", construct_m, "message count")->required();
  construct->add_option("--out", construct_out, "output scheme file")->required();
  construct->callback([&] {
    if (construct_m < 2 || construct_m > construct_d * construct_d) {
      throw CLI::ValidationError("--m must lie in [2, d^2]");
    }
    rc = run_construct(construct_family, construct_d, construct_m, construct_out);
  });

  // optimize
  auto* optimize = app.add_subcommand(
      "optimize", "search Bob unitary sets minimizing the worst-case overlap");
  qfp::OptimizerConfig config;
  config.max_iterations = 2000;
  std::string optimize_init = "haar";
  std::string optimize_out, optimize_trace;
  std::string optimize_format = "table";
  optimize->add_option("--m", config.m, "message count")->required()
      ->check(CLI::Range(2, 1 << 20));
  optimize->add_option("--n", config.n, "subsystem dimension")->required()
      ->check(CLI::PositiveNumber);
  optimize->add_option("--iters", config.max_iterations, "iteration budget")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--seed", config.seed, "RNG seed");
  optimize->add_option("--init", optimize_init)
      ->check(CLI::IsMember({"haar", "weyl-heisenberg"}));
  optimize->add_option("--beta", config.smoothing_beta, "softmax temperature")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--beta-growth", config.beta_growth, "temperature growth per epoch")
      ->check(CLI::Range(1.0, 1e6));
  optimize->add_option("--step", config.step_size, "gradient step size")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--stop-gap", config.stop_gap, "relative bound gap for early stop")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--stop-stall", config.stop_stall,
                       "iterations without improvement before stopping (0 = off)")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--out", optimize_out, "output scheme file");
  optimize->add_option("--trace", optimize_trace, "output CSV trace file");
  optimize->add_option("--format", optimize_format)
      ->check(CLI::IsMember({"json", "table"}));
  optimize->callback([&] {
    config.init = optimize_init == "weyl-heisenberg" ? qfp::InitStrategy::kWeylHeisenberg
                                                     : qfp::InitStrategy::kHaar;
    if (config.init == qfp::InitStrategy::kWeylHeisenberg &&
        config.m > config.n * config.n) {
      throw CLI::ValidationError("weyl-heisenberg init needs m <= n^2");
    }
    rc = run_optimize(config, optimize_out, optimize_trace, optimize_format,
                      optimize_init);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qfp::SchemeParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qfp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
