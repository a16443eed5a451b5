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

// Exit-code and format contract of the command-line front end. Each case
// shells out to the real binary (path injected by the build).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef GAUSSBOUND_CLI
#error "GAUSSBOUND_CLI must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(GAUSSBOUND_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("bounds: pair document, report values and exit 0") {
  const fs::path doc = write_temp(
      "gb_pair.json",
      R"({"state1": {"kind": "thermal", "nbar": 2.0}, "state2": {"kind": "vacuum"}})");
  const RunResult res = run("bounds " + doc.string() + " --json");
  CHECK(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("bounds").at("trace_delta").get<double>() == doctest::Approx(4.0));
  CHECK(report.at("bounds").at("specialized_bound").get<double>() ==
        doctest::Approx(std::sqrt(8.0)));
  CHECK(report.at("bounds").at("which_specialization").get<std::string>() == "thermal_vacuum");
}

TEST_CASE("bounds: identical specs give zero bounds") {
  const fs::path doc = write_temp(
      "gb_same.json",
      R"({"state1": {"kind": "thermal", "nbar": 1.0}, "state2": {"kind": "thermal", "nbar": 1.0}})");
  const RunResult res = run("bounds " + doc.string() + " --json");
  CHECK(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("bounds").at("bures_bound").get<double>() < 1e-6);
}

TEST_CASE("bounds: invalid covariance exits 3 naming the violated invariant") {
  const fs::path doc = write_temp(
      "gb_bad_state.json",
      R"({"state1": {"mean": [0,0], "cov": [[0.4,0],[0,0.4]]}, "state2": {"kind": "vacuum"}})");
  // Capture stderr as well: the message must name the violated invariant.
  const std::string cmd =
      std::string(GAUSSBOUND_CLI) + " bounds " + doc.string() + " 2>&1; echo rc=$?";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  pclose(pipe);
  CHECK(output.find("UncertaintyViolation") != std::string::npos);
  CHECK(output.find("rc=3") != std::string::npos);
}

TEST_CASE("bounds: malformed JSON exits 2") {
  const fs::path doc = write_temp("gb_broken.json", "{not json");
  CHECK(run("bounds " + doc.string()).exit_code == 2);
}

TEST_CASE("bounds: two single-state documents") {
  const fs::path a = write_temp("gb_a.json", R"({"kind": "coherent", "z": [1.0, 0.0]})");
  const fs::path b = write_temp("gb_b.json", R"({"kind": "vacuum"})");
  const RunResult res = run("bounds " + a.string() + " " + b.string() + " --json");
  CHECK(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("overlap").at("value").get<double>() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("exact: oracle overlap for coherent against vacuum") {
  const fs::path doc = write_temp(
      "gb_exact.json",
      R"({"state1": {"kind": "coherent", "z": [1.0, 0.0]}, "state2": {"kind": "vacuum"}})");
  const RunResult res = run("exact " + doc.string() + " --cutoff 40 --json");
  CHECK(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("cutoff").get<int>() == 40);
  CHECK(report.at("oracle").at("overlap").get<double>() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("exact: explicit form exits 4") {
  const fs::path doc = write_temp(
      "gb_exact_explicit.json",
      R"({"state1": {"mean": [0,0], "cov": [[0.5,0],[0,0.5]]}, "state2": {"kind": "vacuum"}})");
  CHECK(run("exact " + doc.string()).exit_code == 4);
}

TEST_CASE("exact: cutoff too small for a hot thermal state exits 5") {
  const fs::path doc = write_temp(
      "gb_exact_hot.json",
      R"({"state1": {"kind": "thermal", "nbar": 2.0}, "state2": {"kind": "vacuum"}})");
  CHECK(run("exact " + doc.string() + " --cutoff 4").exit_code == 5);
}

TEST_CASE("verify: asymptotic suite passes") {
  const RunResult res = run("verify asymptotic --json");
  CHECK(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("all_pass").get<bool>());
  CHECK(report.at("rows").size() == 3);
}

TEST_CASE("verify: unknown suite exits 2") {
  CHECK(run("verify nonsense").exit_code == 2);
}

TEST_CASE("sweep: CSV files are written and byte-identical across runs") {
  const fs::path out1 = fs::temp_directory_path() / "gb_sweep1.csv";
  const fs::path out2 = fs::temp_directory_path() / "gb_sweep2.csv";
  CHECK(run("sweep thermal_vacuum --out " + out1.string()).exit_code == 0);
  CHECK(run("sweep thermal_vacuum --out " + out2.string()).exit_code == 0);

  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string c1 = slurp(out1);
  CHECK(c1 == slurp(out2));
  CHECK(c1.rfind("t,", 0) == 0);

  const fs::path sq = fs::temp_directory_path() / "gb_sweep_sq.csv";
  CHECK(run("sweep squeeze --out " + sq.string() + " --grid 0.1,0.2,0.3").exit_code == 0);
  const std::string csq = slurp(sq);
  CHECK(std::count(csq.begin(), csq.end(), '\n') == 4);

  CHECK(run("sweep nonsense --out /tmp/gb_x.csv").exit_code == 2);
  CHECK(run("sweep thermal_vacuum --out /nonexistent_dir_xyz/out.csv").exit_code == 2);
}
