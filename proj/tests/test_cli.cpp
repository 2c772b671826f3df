// Copyright 2026 The cubenet Authors
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

// End-to-end checks of the installed command line: exit codes, file
// outputs, determinism. Drives the real binary via std::system.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cubenet/network.hpp"
#include "cubenet/serialize.hpp"

#ifndef CUBENET_CLI_PATH
#error "CUBENET_CLI_PATH must point at the cubenet binary"
#endif

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd =
      std::string(CUBENET_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cubenet_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("build exports a cube that re-imports identically") {
  TempDir dir;
  REQUIRE(run("build --network cube --out " + dir.str() +
              " --format json --format dot --format obj --format csv") == 0);

  const cubenet::Network net =
      cubenet::network_from_json(slurp(dir.path / "cube.network.json"));
  CHECK(net.nodes.size() == 8);
  CHECK(net.links.size() == 28);
  CHECK(net.label == "cube");

  const std::string dot = slurp(dir.path / "cube.dot");
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) {
    ++edges;
  }
  CHECK(edges == 28);
  CHECK(fs::exists(dir.path / "cube.obj"));
  CHECK(fs::exists(dir.path / "cube.links.csv"));
}

TEST_CASE("identical invocations write identical bytes") {
  TempDir dir;
  const std::string out1 = (dir.path / "a").string();
  const std::string out2 = (dir.path / "b").string();
  REQUIRE(run("build --network two-cube:node --out " + out1 + " --format json --format dot") == 0);
  REQUIRE(run("build --network two-cube:node --out " + out2 + " --format json --format dot") == 0);
  CHECK(slurp(dir.path / "a" / "two-cube-node.network.json") ==
        slurp(dir.path / "b" / "two-cube-node.network.json"));
  CHECK(slurp(dir.path / "a" / "two-cube-node.dot") ==
        slurp(dir.path / "b" / "two-cube-node.dot"));
}

TEST_CASE("exit codes follow the contract") {
  TempDir dir;
  CHECK(run("build --network bogus --out " + dir.str()) == 1);          // validation
  CHECK(run("build --network lattice:5,5,5 --out " + dir.str()) == 2);  // size
  CHECK(run("build --network lattice:9,9 --out " + dir.str()) == 1);    // malformed
  CHECK(run("build") == 1);                                             // usage
  CHECK(run("verify-paper") == 0);
}

TEST_CASE("congestion command summarizes the plane-sharing network") {
  TempDir dir;
  REQUIRE(run("congestion --network two-cube:plane --out " + dir.str() +
              " --format json --format csv") == 0);
  const std::string summary = slurp(dir.path / "two-cube-plane.summary.json");
  CHECK(summary.find("\"line_event_count\": 8") != std::string::npos);
  CHECK(summary.find("\"external_count\": 0") != std::string::npos);
  const std::string csv = slurp(dir.path / "two-cube-plane.events.csv");
  CHECK(csv.find("# schema_version=1") == 0);
  CHECK(fs::exists(dir.path / "two-cube-plane.congestion.json"));
}

TEST_CASE("congestion command reports the cube's seven coordinates") {
  TempDir dir;
  REQUIRE(run("congestion --network cube --out " + dir.str()) == 0);
  const std::string summary = slurp(dir.path / "cube.summary.json");
  CHECK(summary.find("\"point_coordinate_count\": 7") != std::string::npos);
  CHECK(summary.find("\"fraction_congested\": \"4/7\"") != std::string::npos);
  CHECK(summary.find("\"full_node_count\": 0") != std::string::npos);
}

TEST_CASE("equilibrium command writes the result bundle") {
  TempDir dir;
  const fs::path problem = dir.path / "problem.json";
  {
    std::ofstream out(problem);
    out << R"({"problems":[{"player":0,"destinations":[1],"benefits":["3"],
               "delivery_costs":["1"],"storage_cost":"2"}]})";
  }
  REQUIRE(run("equilibrium --problem " + problem.string() + " --out " + dir.str() +
              " --seed 5") == 0);
  const std::string result = slurp(dir.path / "problem.result.json");
  CHECK(result.find("\"value\": \"2/1\"") != std::string::npos);
  CHECK(result.find("\"self\": \"0/1\"") != std::string::npos);
  CHECK(slurp(dir.path / "problem.kt.txt").find("satisfied") != std::string::npos);

  SUBCASE("invalid problems exit with the validation code") {
    const fs::path bad = dir.path / "bad.json";
    {
      std::ofstream out(bad);
      out << R"({"problems":[{"player":0,"destinations":[1],"benefits":["1"],
                 "delivery_costs":["1"],"storage_cost":"2"}]})";
    }
    CHECK(run("equilibrium --problem " + bad.string() + " --out " + dir.str()) == 1);
  }

  SUBCASE("a symmetric cube bundle reports random completeness") {
    std::vector<cubenet::PlayerProblem> problems;
    for (std::size_t i = 0; i < 8; ++i) {
      cubenet::PlayerProblem p;
      p.player = i;
      for (std::size_t j = 0; j < 8; ++j) {
        if (j == i) continue;
        p.destinations.push_back(j);
        p.benefits.push_back(cubenet::Rational(3));
        p.delivery_costs.push_back(cubenet::Rational(1));
      }
      p.storage_cost = cubenet::Rational(1);
      problems.push_back(std::move(p));
    }
    const fs::path bundle = dir.path / "cube_problems.json";
    {
      std::ofstream out(bundle);
      out << cubenet::problems_to_json(problems);
    }
    REQUIRE(run("equilibrium --problem " + bundle.string() + " --out " + dir.str() +
                " --network cube") == 0);
    const std::string report = slurp(dir.path / "cube_problems.result.json");
    CHECK(report.find("\"randomly_complete\": true") != std::string::npos);
  }
}

TEST_CASE("paradox command emits one row per staircase size") {
  TempDir dir;
  REQUIRE(run("paradox --network lattice:1,1,2 --out " + dir.str()) == 0);
  const std::string csv = slurp(dir.path / "paradox-lattice-1-1-2.csv");
  CHECK(csv.find("\n1,1,1,28,16,4/7,7,0,0,0,,,\n") != std::string::npos);
  CHECK(csv.find("\n1,1,2,66,58,29/33,41,4,8,0,,,\n") != std::string::npos);

  SUBCASE("non-lattice selectors are rejected") {
    CHECK(run("paradox --network cube --out " + dir.str()) == 1);
  }
}

TEST_CASE("verify-paper writes the report when asked") {
  TempDir dir;
  REQUIRE(run("verify-paper --out " + dir.str()) == 0);
  const std::string report = slurp(dir.path / "verify-report.json");
  CHECK(report.find("\"all_pass\": true") != std::string::npos);
}
