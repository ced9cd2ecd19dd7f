/**********
 *   Copyright 2026 psphere authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* p = std::getenv("PSPHERE_CLI_PATH");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.output.append(buf, n);
  }
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_record(const RunResult& r) {
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("classify emits class, determinant and boost parameter") {
  const RunResult r = run_cli("classify --p0 5 --pz 3");
  const json rec = parse_record(r);
  REQUIRE(rec["command"] == "classify");
  REQUIRE(rec["inputs"]["p0"] == 5.0);
  REQUIRE(rec["results"]["class"] == "Massive");
  REQUIRE(rec["results"]["det"] == 16.0);
  REQUIRE(std::abs(rec["results"]["eta"].get<double>() - std::log(2.0)) <=
          1e-15);
  // standard form: the rest-frame matrix diag(4, 4)
  REQUIRE(rec["results"]["standard"][0][0][0] == 4.0);
  REQUIRE(rec["results"]["standard"][1][1][0] == 4.0);
  REQUIRE(rec["results"]["standard"][0][1][0] == 0.0);
}

TEST_CASE("classify covers the other classes") {
  SECTION("massless") {
    const json rec = parse_record(run_cli("classify --p0 1 --pz 1"));
    REQUIRE(rec["results"]["class"] == "Massless");
    REQUIRE(rec["results"]["standard"][0][0][0] == 2.0);
    REQUIRE_FALSE(rec["results"].contains("eta"));
  }
  SECTION("imaginary mass") {
    const json rec = parse_record(run_cli("classify --p0 0 --pz 1"));
    REQUIRE(rec["results"]["class"] == "ImaginaryMass");
    REQUIRE(rec["results"]["det"] == -1.0);
    REQUIRE(rec["results"]["standard"][1][1][0] == -1.0);
  }
  SECTION("null") {
    const json rec = parse_record(run_cli("classify --p0 0 --pz 0"));
    REQUIRE(rec["results"]["class"] == "Null");
    REQUIRE(rec["results"]["standard"].is_null());
  }
  SECTION("transverse momentum enters the magnitude") {
    const json rec = parse_record(run_cli("classify --p0 5 --pz 0 --px 3"));
    REQUIRE(rec["results"]["class"] == "Massive");
    REQUIRE(std::abs(rec["results"]["eta"].get<double>() - std::log(2.0)) <=
            1e-15);
  }
  SECTION("negative energy is a domain error") {
    REQUIRE(run_cli("classify --p0 -1 --pz 0").exit_code == 1);
  }
}

TEST_CASE("wigner emits the little-group matrix and its lift") {
  SECTION("massless") {
    const json rec =
        parse_record(run_cli("wigner --class massless --param 2.5"));
    REQUIRE(rec["results"]["wigner"][0][1][0] == -2.5);
    REQUIRE(rec["results"]["wigner"][1][0][0] == 0.0);
    REQUIRE(rec["results"]["residual"].get<double>() <= 1e-12);
    REQUIRE(rec["results"]["lift"].size() == 4);
  }
  SECTION("massive with degrees") {
    const json rec =
        parse_record(run_cli("wigner --class massive --param 90 --degrees"));
    const double r = std::sqrt(0.5);
    REQUIRE(std::abs(rec["results"]["wigner"][0][0][0].get<double>() - r) <=
            1e-15);
    REQUIRE(std::abs(rec["results"]["wigner"][0][1][0].get<double>() + r) <=
            1e-15);
  }
  SECTION("imaginary") {
    const json rec =
        parse_record(run_cli("wigner --class imaginary --param 1.3"));
    REQUIRE(std::abs(rec["results"]["wigner"][0][0][0].get<double>() -
                     std::cosh(0.65)) <= 1e-15);
    REQUIRE(rec["results"]["momentum"][1][1][0] == -1.0);
  }
  SECTION("unknown class is an argument error") {
    REQUIRE(run_cli("wigner --class tachyonic --param 1").exit_code == 2);
  }
}

TEST_CASE("contract reports the residual against the triangular target") {
  const json rec = parse_record(run_cli("contract --gamma 1 --eta 10"));
  REQUIRE(rec["results"]["residual"].get<double>() < 1e-8);
  REQUIRE(rec["results"]["target"][0][1][0] == -1.0);
  REQUIRE(rec["results"]["contracted"][0][1][0] == -1.0);

  SECTION("unreachable rotation angle is a domain error") {
    REQUIRE(run_cli("contract --gamma 3 --eta 0").exit_code == 1);
  }
}

TEST_CASE("trajectory sweeps the fixed-energy path") {
  SECTION("csv") {
    const RunResult r =
        run_cli("trajectory --gamma 1 --eta-max 10 --steps 5 --csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    REQUIRE(line == "eta,residual,mass,momentum");
    int rows = 0;
    double first_eta = -1.0, last_eta = -1.0, last_residual = -1.0;
    double first_mass = -1.0;
    while (std::getline(lines, line)) {
      ++rows;
      std::istringstream fields(line);
      std::string field;
      std::getline(fields, field, ',');
      last_eta = std::stod(field);
      if (rows == 1) first_eta = last_eta;
      std::getline(fields, field, ',');
      last_residual = std::stod(field);
      std::getline(fields, field, ',');
      if (rows == 1) first_mass = std::stod(field);
    }
    REQUIRE(rows == 5);
    REQUIRE(first_eta == 0.0);  // ln|gamma| = 0 for gamma = 1
    REQUIRE(first_mass == 1.0);  // rest point of the unit-energy path
    REQUIRE(last_eta == 10.0);
    REQUIRE(last_residual < 1e-8);
  }
  SECTION("json rows") {
    const json rec = parse_record(
        run_cli("trajectory --gamma 2 --eta-max 4 --steps 9 --p0 2.5"));
    REQUIRE(rec["results"]["rows"].size() == 9);
    REQUIRE(std::abs(rec["results"]["eta_min"].get<double>() -
                     std::log(2.0)) <= 1e-15);
    // mass^2 + momentum^2 = p0^2 on every row
    for (const auto& row : rec["results"]["rows"]) {
      const double mass = row[2].get<double>();
      const double momentum = row[3].get<double>();
      REQUIRE(std::abs(mass * mass + momentum * momentum - 6.25) <= 1e-12);
    }
  }
  SECTION("eta-max below the sweep start is an argument error") {
    REQUIRE(run_cli("trajectory --gamma 10 --eta-max 1 --steps 5").exit_code ==
            2);
  }
}

TEST_CASE("coherency emits matrix, Stokes vector and momentum triple") {
  SECTION("totally incoherent in degrees") {
    const json rec = parse_record(run_cli("coherency --xi 90 --degrees"));
    REQUIRE(std::abs(rec["results"]["matrix"][0][1][0].get<double>()) <=
            1e-15);
    REQUIRE(rec["results"]["matrix"][0][0][0] == 1.0);
    REQUIRE(rec["results"]["degree_of_polarization"].get<double>() <= 1e-15);
    REQUIRE(rec["results"]["stokes"][0] == 2.0);
    REQUIRE(std::abs(rec["results"]["stokes"][2].get<double>()) <= 1e-15);
  }
  SECTION("momentum triple appears with --p0") {
    const json rec = parse_record(run_cli("coherency --xi 0.5 --p0 2"));
    REQUIRE(std::abs(rec["results"]["mass"].get<double>() -
                     2.0 * std::sin(0.5)) <= 1e-14);
    REQUIRE(std::abs(rec["results"]["momentum"].get<double>() -
                     2.0 * std::cos(0.5)) <= 1e-14);
    REQUIRE(rec["results"]["energy"] == 2.0);
    REQUIRE(rec["results"]["momentum_matrix"][0][1][0] == 0.0);
  }
  SECTION("no momentum block without --p0") {
    const json rec = parse_record(run_cli("coherency --xi 0.5"));
    REQUIRE_FALSE(rec["results"].contains("mass"));
  }
  SECTION("angle out of range is an argument error") {
    REQUIRE(run_cli("coherency --xi 2.0").exit_code == 2);
  }
}

TEST_CASE("lift validates and translates a two-by-two element") {
  const json rec = parse_record(run_cli("lift --matrix 1,0,0,0,0,0,1,0"));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      REQUIRE(rec["results"]["lift"][i][j] == (i == j ? 1.0 : 0.0));
    }
  }
  SECTION("non-unimodular input is an argument error") {
    REQUIRE(run_cli("lift --matrix 2,0,0,0,0,0,2,0").exit_code == 2);
  }
  SECTION("malformed input is an argument error") {
    REQUIRE(run_cli("lift --matrix 1,0,0").exit_code == 2);
    REQUIRE(run_cli("lift --matrix 1,0,0,0,0,0,1,zebra").exit_code == 2);
  }
}

TEST_CASE("dictionary renders as text and JSON") {
  SECTION("text table") {
    const RunResult r = run_cli("dictionary");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("Polarization optics") != std::string::npos);
    REQUIRE(r.output.find("Phase shift by phi") != std::string::npos);
    REQUIRE(r.output.find("Squeeze along 45 degrees") != std::string::npos);
    REQUIRE(r.output.find("(mass)^2") != std::string::npos);
  }
  SECTION("json") {
    const json rec = parse_record(run_cli("dictionary --json"));
    REQUIRE(rec["results"]["entries"].size() == 5);
    REQUIRE(rec["results"]["entries"][0]["family"] == "rotation_z");
    REQUIRE(rec["results"]["entries"][4]["family"].is_null());
    REQUIRE(rec["results"]["entries"][2]["optics"] ==
            "Squeeze along x and y");
  }
}

TEST_CASE("argument handling") {
  REQUIRE(run_cli("").exit_code == 2);            // missing subcommand
  REQUIRE(run_cli("warp --p0 1").exit_code == 2); // unknown subcommand
  REQUIRE(run_cli("classify --p0 5").exit_code == 2);  // missing --pz
  REQUIRE(run_cli("--help").exit_code == 0);
  REQUIRE(run_cli("classify --help").exit_code == 0);
}

TEST_CASE("output is deterministic and --out redirects it") {
  const std::string args = "coherency --xi 0.7 --phi 0.3 --p0 1.5";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(first.output == second.output);
  REQUIRE_FALSE(first.output.empty());
  REQUIRE(first.output.back() == '\n');

  const std::filesystem::path out =
      std::filesystem::temp_directory_path() / "psphere_cli_out_test.json";
  std::filesystem::remove(out);
  const RunResult redirected = run_cli(args + " --out " + out.string());
  REQUIRE(redirected.exit_code == 0);
  REQUIRE(redirected.output.empty());  // nothing on standard output
  std::ifstream f(out, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  REQUIRE(content.str() == first.output);
  f.close();
  std::filesystem::remove(out);
}
