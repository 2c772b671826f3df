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

#include "cubenet/serialize.hpp"

#include <doctest.h>

#include <sstream>

#include "cubenet/errors.hpp"

using namespace cubenet;

namespace {

std::size_t count_lines_starting_with(const std::string& text, const std::string& prefix) {
  std::size_t count = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind(prefix, 0) == 0) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("network json round-trips to an identical value") {
  for (const Network& net :
       {build_linear(), build_cube(), build_two_cube(SharingMode::kEdge),
        build_lattice(2, 1, 1, 64)}) {
    const std::string text = network_to_json(net);
    const Network back = network_from_json(text);
    CHECK(back.nodes == net.nodes);
    CHECK(back.links == net.links);
    CHECK(back.cubes == net.cubes);
    CHECK(back.label == net.label);
    CHECK(back.shared.has_value() == net.shared.has_value());
    if (net.shared) {
      CHECK(back.shared->mode == net.shared->mode);
      CHECK(back.shared->nodes == net.shared->nodes);
    }
    // Byte stability: a second export is identical.
    CHECK(network_to_json(back) == text);
  }
}

TEST_CASE("network json rejects malformed documents") {
  CHECK_THROWS_AS(network_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(network_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(network_from_json(R"({"schema_version":99})"), ValidationError);

  // Tampering with a link kind is caught.
  std::string text = network_to_json(build_linear());
  const std::string from = "\"kind\": \"Unit\"";
  text.replace(text.find(from), from.size(), "\"kind\": \"LongEdge\"");
  CHECK_THROWS_AS(network_from_json(text), ValidationError);
}

TEST_CASE("dot and obj exports are stable and complete") {
  const Network net = build_two_cube(SharingMode::kPlane);
  const std::string dot = network_to_dot(net);
  CHECK(count_lines_starting_with(dot, "  \"") == 12 + 66);  // nodes + edges
  CHECK(dot.find("kind=\"LongEdge\"") != std::string::npos);
  CHECK(dot == network_to_dot(net));

  const std::string obj = network_to_obj(net);
  CHECK(count_lines_starting_with(obj, "v ") == 12);
  CHECK(count_lines_starting_with(obj, "l ") == 66);
  CHECK(obj.find("# schema_version=1") == 0);
}

TEST_CASE("event csv carries exact loci") {
  const Network net = build_two_cube(SharingMode::kPlane);
  const auto events = pairwise_congestion(net);
  const std::string csv = events_to_csv(net, events);
  CHECK(count_lines_starting_with(csv, "line,") == 8);
  CHECK(count_lines_starting_with(csv, "full,") == 36);
  CHECK(count_lines_starting_with(csv, "point,") == 73);
  CHECK(csv.find("1/2") != std::string::npos);
  CHECK(csv.find(".") == std::string::npos);  // no decimals anywhere
}

TEST_CASE("congestion map json lists the cube's seven coordinates") {
  const Network net = build_cube();
  const CongestionMap map = congestion_coordinates(pairwise_congestion(net));
  const std::string text = congestion_map_to_json(net, map);
  CHECK(count_lines_starting_with(text, "      \"locus\"") == 7);
  CHECK(text.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("summary json records the shared-node congestion status") {
  const Network net = build_two_cube(SharingMode::kNode);
  const std::string text = congestion_summary_to_json(net, pairwise_congestion(net));
  CHECK(text.find("\"shared_node_fully_congested\": true") != std::string::npos);
  CHECK(text.find("\"shared_node_unit_links_line_congested\": true") != std::string::npos);
  CHECK(text.find("\"external_count\": 18") != std::string::npos);
}

TEST_CASE("problem files parse and validate by field") {
  const std::string good = R"({
    "schema_version": 1,
    "problems": [
      {"player": 0, "destinations": [1], "benefits": ["3"],
       "delivery_costs": ["1"], "storage_cost": "2"},
      {"player": 1, "destinations": [0], "benefits": ["5/2"],
       "delivery_costs": ["1/2"], "storage_cost": "1/4"}
    ]
  })";
  const auto problems = problems_from_json(good);
  REQUIRE(problems.size() == 2);
  CHECK(problems[0].benefits[0] == Rational(3));
  CHECK(problems[1].storage_cost == Rational(1, 4));
  CHECK(problems[1].net_benefit(0) == Rational(2));

  SUBCASE("a benefit equal to the cost names the field") {
    const std::string bad = R"({"problems":[
      {"player":0,"destinations":[1],"benefits":["1"],
       "delivery_costs":["1"],"storage_cost":"2"}]})";
    try {
      problems_from_json(bad);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      CHECK(what.find("benefits[0]") != std::string::npos);
    }
  }

  SUBCASE("missing pieces are named") {
    CHECK_THROWS_AS(problems_from_json("{}"), ValidationError);
    CHECK_THROWS_AS(problems_from_json(R"({"problems":[]})"), ValidationError);
    CHECK_THROWS_AS(problems_from_json(R"({"problems":[{"player":0}]})"),
                    ValidationError);
    const std::string no_storage = R"({"problems":[
      {"player":0,"destinations":[1],"benefits":["3"],"delivery_costs":["1"]}]})";
    try {
      problems_from_json(no_storage);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("storage_cost") != std::string::npos);
    }
  }

  SUBCASE("problems round-trip through json") {
    const std::string text = problems_to_json(problems);
    const auto back = problems_from_json(text);
    REQUIRE(back.size() == problems.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back[i].player == problems[i].player);
      CHECK(back[i].destinations == problems[i].destinations);
      CHECK(back[i].benefits == problems[i].benefits);
      CHECK(back[i].delivery_costs == problems[i].delivery_costs);
      CHECK(back[i].storage_cost == problems[i].storage_cost);
    }
  }
}

TEST_CASE("equilibrium report is deterministic and exact") {
  PlayerProblem p;
  p.player = 0;
  p.destinations = {1, 2, 3};
  p.benefits = {Rational(3), Rational(3), Rational(3)};
  p.delivery_costs = {Rational(1), Rational(1), Rational(1)};
  p.storage_cost = Rational(1);

  const std::string a = equilibrium_report_to_json({p}, 7, std::nullopt);
  const std::string b = equilibrium_report_to_json({p}, 7, std::nullopt);
  CHECK(a == b);
  CHECK(a.find("\"value\": \"2/1\"") != std::string::npos);
  CHECK(a.find("mt19937_64-invcdf-exp-v1") != std::string::npos);
  CHECK(a.find("randomly_complete") == std::string::npos);

  const std::string with_flag = equilibrium_report_to_json({p}, 7, true);
  CHECK(with_flag.find("\"randomly_complete\": true") != std::string::npos);

  const std::string tables = equilibrium_kt_tables({p});
  CHECK(tables.find("player 0") != std::string::npos);
  CHECK(tables.find("satisfied") != std::string::npos);
}
