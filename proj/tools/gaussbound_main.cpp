// Copyright 2026 The gaussbound Authors
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

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gaussbound/io.hpp"

namespace {

using namespace gaussbound;
using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 invalid state, 4 explicit form where a builder is required,
// 5 cutoff too small.

constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitExplicitForm = 4;
constexpr int kExitCutoff = 5;

void emit(const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << std::endl;
  else
    std::cout << io::render_report_text(report);
}

std::pair<io::StateSpec, io::StateSpec> load_pair(const std::vector<std::string>& paths) {
  const io::Document first = io::load_document(paths[0]);
  std::optional<io::Document> second;
  if (paths.size() > 1) second = io::load_document(paths[1]);
  return io::resolve_pair(first, second);
}

int run_bounds(const std::vector<std::string>& paths, bool as_json) {
  std::pair<io::StateSpec, io::StateSpec> pair{{}, {}};
  try {
    pair = load_pair(paths);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    // Explicit specs are validated while parsing.
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  }
  try {
    emit(io::bounds_report(pair.first, pair.second), as_json);
    return 0;
  } catch (const Error& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  }
}

int run_exact(const std::vector<std::string>& paths, int cutoff, bool as_json) {
  std::pair<io::StateSpec, io::StateSpec> pair{{}, {}};
  try {
    pair = load_pair(paths);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  }
  if (!pair.first.is_builder() || !pair.second.is_builder()) {
    std::cerr << "exact requires builder-form states; explicit covariance matrices have no "
                 "generic construction on the number basis\n";
    return kExitExplicitForm;
  }
  try {
    emit(io::exact_report(pair.first, pair.second, cutoff), as_json);
    return 0;
  } catch (const CutoffTooSmall& e) {
    std::cerr << "cutoff too small: " << e.what() << "\n";
    return kExitCutoff;
  } catch (const DimCapExceeded& e) {
    std::cerr << "cutoff too large: " << e.what() << "\n";
    return kExitCutoff;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidState;
  }
}

int run_verify(const std::string& suite, std::uint64_t seed, int count, int cutoff,
               bool as_json) {
  if (suite == "asymptotic") {
    const auto rows = verify::run_asymptotic();
    json report;
    report["command"] = "verify";
    report["suite"] = suite;
    bool all = true;
    json jrows = json::array();
    for (const verify::AsymptoticRow& r : rows) {
      json jr;
      jr["t"] = r.t;
      jr["diff_trace_norm"] = r.diff_trace_norm;
      jr["bound"] = r.bound;
      jr["exact_2db"] = r.exact_two_bures;
      jr["exact_trace_norm"] = r.exact_trace_norm;
      jr["ratio_2db_bound"] = r.ratio_bures;
      jr["ratio_trace_norm"] = r.ratio_trace;
      jr["pass"] = r.pass;
      all = all && r.pass;
      jrows.push_back(std::move(jr));
    }
    report["rows"] = jrows;
    report["all_pass"] = all;
    if (as_json) {
      std::cout << report.dump(2) << std::endl;
    } else {
      std::cout << "verify asymptotic\n";
      for (const verify::AsymptoticRow& r : rows)
        std::cout << "  t=" << io::format_double(r.t)
                  << "  ratio_2db/bound=" << io::format_double(r.ratio_bures)
                  << "  ratio_trace=" << io::format_double(r.ratio_trace) << "  "
                  << (r.pass ? "pass" : "FAIL") << "\n";
      std::cout << "  all_pass: " << (all ? "true" : "false") << "\n";
    }
    return all ? 0 : kExitVerifyFail;
  }

  std::vector<verify::PairOutcome> outcomes;
  if (suite == "canonical") {
    outcomes = verify::run_canonical(cutoff);
  } else if (suite == "random") {
    outcomes = verify::run_random(seed, count);
  } else {
    std::cerr << "unknown suite '" << suite << "' (expected canonical, random or asymptotic)\n";
    return kExitParse;
  }
  const json report = io::verify_report(outcomes);
  emit(report, as_json);
  if (!report.at("all_pass").get<bool>()) {
    std::cerr << "first violation: " << report.at("first_violation").dump() << "\n";
    return kExitVerifyFail;
  }
  return 0;
}

int run_sweep(const std::string& family, const std::vector<double>& grid,
              const std::string& out_path) {
  std::string csv;
  if (family == "thermal_vacuum") {
    const std::vector<double> g = grid.empty() ? std::vector<double>{1e-1, 1e-2, 1e-3} : grid;
    csv = io::asymptotic_csv(verify::run_asymptotic(g));
  } else if (family == "squeeze") {
    const std::vector<double> g =
        grid.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5} : grid;
    csv = io::squeeze_csv(verify::run_squeeze(g));
  } else {
    std::cerr << "unknown family '" << family << "' (expected thermal_vacuum or squeeze)\n";
    return kExitParse;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return kExitParse;
  }
  out << csv;
  if (!out.good()) {
    std::cerr << "write to '" << out_path << "' failed\n";
    return kExitParse;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on Bures and trace-norm distances between bosonic Gaussian states"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  bool as_json = false;
  int cutoff = 0;
  std::uint64_t seed = 7;
  int count = 50;
  std::string suite = "canonical";
  std::string family;
  std::string out_path;
  std::vector<double> grid;

  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "closed-form bound report from first and second moments");
  cmd_bounds->add_option("documents", paths, "pair document, or two single-state documents")
      ->required()
      ->expected(1, 2);
  cmd_bounds->add_flag("--json", as_json, "machine-readable report on stdout");

  CLI::App* cmd_exact = app.add_subcommand(
      "exact", "exact metrics from the truncated number-basis construction");
  cmd_exact->add_option("documents", paths, "pair document, or two single-state documents")
      ->required()
      ->expected(1, 2);
  cmd_exact->add_option("--cutoff", cutoff, "levels per mode (default 60 / 24 for two modes)");
  cmd_exact->add_flag("--json", as_json, "machine-readable report on stdout");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "certify the bounds against the exact engine");
  cmd_verify->add_option("suite", suite, "canonical | random | asymptotic")->required();
  cmd_verify->add_option("--seed", seed, "seed for the random suite");
  cmd_verify->add_option("--count", count, "number of random pairs");
  cmd_verify->add_option("--cutoff", cutoff, "override the per-mode cutoff");
  cmd_verify->add_flag("--json", as_json, "machine-readable report on stdout");

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "closed-form parameter sweeps to CSV");
  cmd_sweep->add_option("family", family, "thermal_vacuum | squeeze")->required();
  cmd_sweep->add_option("--out", out_path, "output CSV path")->required();
  cmd_sweep->add_option("--grid", grid, "grid values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  if (cmd_bounds->parsed()) return run_bounds(paths, as_json);
  if (cmd_exact->parsed()) return run_exact(paths, cutoff, as_json);
  if (cmd_verify->parsed()) return run_verify(suite, seed, count, cutoff, as_json);
  if (cmd_sweep->parsed()) return run_sweep(family, grid, out_path);
  return kExitParse;
}
