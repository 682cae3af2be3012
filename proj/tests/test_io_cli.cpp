// Copyright 2026 The bellvar Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "bellvar/bell_ops.hpp"
#include "bellvar/io.hpp"
#include "bellvar/states.hpp"
#include "oracles.hpp"

using bellvar::Complex;
using bellvar::Cvec;
using bellvar::StateVector;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(BELLVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("seventeen-digit formatting round trips") {
  for (double v : {0.0, 1.0, -1.5, bellvar::kPi, std::sqrt(2.0), 1e-300,
                   -6.0221e23, 2.0 + std::sqrt(2.0)}) {
    CHECK(std::stod(bellvar::format_g17(v)) == v);
  }
  CHECK(bellvar::format_g17(4.0) == "4");
}

TEST_CASE("state json round trip is exact") {
  std::mt19937_64 gen(81);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi(2, oracles::random_state_vec(2, gen));
    const StateVector back = bellvar::state_from_json(bellvar::state_to_json(psi));
    CHECK(back.n() == 2);
    CHECK((back.amps() - psi.amps()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("state json schema errors name the field") {
  CHECK_THROWS_WITH_AS(bellvar::state_from_json("{\"amps\": []}"),
                       doctest::Contains("n"), bellvar::SchemaError);
  CHECK_THROWS_WITH_AS(bellvar::state_from_json("{\"n\": 2}"),
                       doctest::Contains("amps"), bellvar::SchemaError);
  CHECK_THROWS_WITH_AS(
      bellvar::state_from_json("{\"n\": 2, \"amps\": [[1, 0]]}"),
      doctest::Contains("amps"), bellvar::SchemaError);
  CHECK_THROWS_AS(
      bellvar::state_from_json(
          "{\"n\": 1, \"amps\": [[1, 0], [\"x\", 0]]}"),
      bellvar::SchemaError);
  CHECK_THROWS_AS(bellvar::state_from_json("not json"), bellvar::SchemaError);
}

TEST_CASE("pauli text round trip") {
  const bellvar::PauliSum op = bellvar::variant_operator(3);
  const std::string text = bellvar::pauli_sum_to_text(op);
  const bellvar::PauliSum back = bellvar::pauli_sum_from_text(text);
  CHECK(back.terms() == op.terms());

  CHECK_THROWS_AS(bellvar::pauli_sum_from_text(""), bellvar::SchemaError);
  CHECK_THROWS_AS(bellvar::pauli_sum_from_text("0.5 XQ"),
                  bellvar::SchemaError);
  CHECK_THROWS_AS(bellvar::pauli_sum_from_text("0.5 XX\n1.0 XXX"),
                  bellvar::SchemaError);
  CHECK_THROWS_AS(bellvar::pauli_sum_from_text("abc XX"),
                  bellvar::SchemaError);
}

TEST_CASE("cli prints the pinned deterministic-model values") {
  const CliResult variant = run_cli("lhv --n 2 --expr variant");
  CHECK(variant.exit_code == 0);
  CHECK(variant.out == "4\n");
  const CliResult chsh = run_cli("lhv --n 2 --expr chsh");
  CHECK(chsh.exit_code == 0);
  CHECK(chsh.out == "2\n");
}

TEST_CASE("cli verify reports residuals") {
  const CliResult r = run_cli("verify --n 4");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string key;
  double value = -1.0;
  lines >> key >> value;
  CHECK(key == "spectral_residual");
  CHECK(value < 1e-12);
  lines >> key >> value;
  CHECK(key == "square_identity_residual");
  CHECK(value < 1e-12);
}

TEST_CASE("cli scan emits the pinned csv") {
  const CliResult r = run_cli("scan-ghz --n 3 --theta-steps 181 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "theta,measured,analytic,separable_bound");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) {
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 181);
  // The last row sits at theta = pi/4 where the measured value is 6.
  std::istringstream last(rows.back());
  std::string cell;
  std::getline(last, cell, ',');
  CHECK(std::stod(cell) == doctest::Approx(bellvar::kPi / 4));
  std::getline(last, cell, ',');
  CHECK(std::abs(std::stod(cell) - 6.0) < 1e-12);
}

TEST_CASE("cli csv and json scans carry identical values") {
  const CliResult csv = run_cli("scan-ghz --n 2 --theta-steps 21 --format csv");
  const CliResult js = run_cli("scan-ghz --n 2 --theta-steps 21 --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(js.out);
  const auto& rows = parsed.at("rows");
  REQUIRE(rows.size() == 21);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);  // header
  for (std::size_t i = 0; i < 21; ++i) {
    REQUIRE(std::getline(lines, line));
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == rows[i].at("theta").get<double>());
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == rows[i].at("measured").get<double>());
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == rows[i].at("analytic").get<double>());
    std::getline(cells, cell, ',');
    CHECK(std::stod(cell) == rows[i].at("separable_bound").get<double>());
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("--nonsense").exit_code == 2);
  CHECK(run_cli("bounds --n notanumber").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bounds --n 3 --expr chsh").exit_code == 1);
  CHECK(run_cli("lhv --n 9 --expr mk").exit_code == 1);
  CHECK(run_cli("gisin --input /nonexistent/state.json").exit_code == 1);
  CHECK(run_cli("build --n 3 --format csv").exit_code == 1);
}

TEST_CASE("cli rejects malformed state files") {
  const std::string path = "malformed_state.json";
  std::ofstream(path) << "{\"n\": 2, \"amps\": [[1, 0]]}";
  CHECK(run_cli("schmidt --input " + path).exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("cli output flag writes the same bytes") {
  const std::string path = "scan_out.csv";
  const CliResult direct = run_cli("scan-ghz --n 2 --theta-steps 11 --format csv");
  const CliResult filed =
      run_cli("scan-ghz --n 2 --theta-steps 11 --format csv --output " + path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(bellvar::read_text_file(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("cli emitted state round trips to identical amplitudes") {
  const std::string path = "emitted_state.json";
  const CliResult first = run_cli("gisin --seed 17 --emit-state " + path +
                                  " --format json");
  REQUIRE(first.exit_code == 0);
  const StateVector psi = bellvar::read_state_file(path);
  const StateVector direct = bellvar::random_state(2, 17);
  CHECK((psi.amps() - direct.amps()).cwiseAbs().maxCoeff() == 0.0);
  const CliResult second = run_cli("gisin --input " + path + " --format json");
  REQUIRE(second.exit_code == 0);
  CHECK(second.out == first.out);
  std::remove(path.c_str());
}

TEST_CASE("cli build output re-parses to the same operator") {
  const CliResult r = run_cli("build --n 4 --expr mk");
  REQUIRE(r.exit_code == 0);
  const bellvar::PauliSum parsed = bellvar::pauli_sum_from_text(r.out);
  CHECK(parsed.terms() == bellvar::mk_bell(4).b.terms());
}

TEST_CASE("cli repeated runs are byte-identical") {
  for (const std::string args :
       {std::string("bounds --n 3 --expr variant --seed 9 --format json"),
        std::string("gisin --seed 23 --format json"),
        std::string("schmidt --seed 4 --format text"),
        std::string("scan-ghz --n 4 --theta-steps 51 --format csv"),
        std::string("build --n 5 --expr variant --format json"),
        std::string("lhv --n 3 --expr mk --format json")}) {
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
