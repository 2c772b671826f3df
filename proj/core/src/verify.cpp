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

#include "cubenet/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cubenet/congestion.hpp"
#include "cubenet/equilibrium.hpp"
#include "cubenet/network.hpp"

namespace cubenet {
namespace {

std::string census_string(const std::map<LinkKind, std::size_t>& census) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kind, count] : census) {
    if (count == 0) continue;
    if (!first) os << " ";
    os << to_string(kind) << ":" << count;
    first = false;
  }
  return os.str();
}

void add(VerificationReport& report, std::string id, std::string description,
         std::string expected, std::string computed) {
  VerificationRow row;
  row.pass = expected == computed;
  row.id = std::move(id);
  row.description = std::move(description);
  row.expected = std::move(expected);
  row.computed = std::move(computed);
  report.rows.push_back(std::move(row));
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerificationRow& r) { return r.pass; });
}

std::string VerificationReport::render() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const VerificationRow& row : rows) {
    os << (row.pass ? "[PASS] " : "[FAIL] ") << row.id << ": " << row.description
       << " (expected " << row.expected << ", computed " << row.computed << ")\n";
    if (row.pass) ++passed;
  }
  os << passed << "/" << rows.size() << " checks passed\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const VerificationRow& row : rows) {
    rows_json.push_back(nlohmann::json{{"id", row.id},
                                       {"description", row.description},
                                       {"expected", row.expected},
                                       {"computed", row.computed},
                                       {"pass", row.pass}});
  }
  nlohmann::json doc{
      {"schema_version", 1}, {"all_pass", all_pass()}, {"rows", rows_json}};
  return doc.dump(2) + "\n";
}

VerificationReport run_verification() {
  VerificationReport report;

  const Network cube = build_cube();
  const Network plane2 = build_two_cube(SharingMode::kPlane);
  const Network edge2 = build_two_cube(SharingMode::kEdge);
  const Network node2 = build_two_cube(SharingMode::kNode);

  add(report, "cube-links", "single cube link total", "28",
      std::to_string(cube.links.size()));
  add(report, "plane-sharing-links", "plane-sharing two-cube link total", "66",
      std::to_string(plane2.links.size()));
  add(report, "plane-sharing-census", "plane-sharing two-cube link census",
      "Unit:20 PlanarDiagonal:22 SpatialDiagonal:8 LongPlanarDiagonal:8 "
      "LongSpatialDiagonal:4 LongEdge:4",
      census_string(link_census(plane2)));
  add(report, "edge-sharing-links", "edge-sharing two-cube link total", "91",
      std::to_string(edge2.links.size()));
  add(report, "node-sharing-links", "node-sharing two-cube link total", "105",
      std::to_string(node2.links.size()));

  const auto plane2_events = pairwise_congestion(plane2);
  const ParadoxMetrics plane2_metrics = paradox_metrics(plane2, plane2_events);
  add(report, "plane-sharing-line-events", "plane-sharing line congestion events", "8",
      std::to_string(plane2_metrics.line_event_count));

  const auto cube_events = pairwise_congestion(cube);
  const ParadoxMetrics cube_metrics = paradox_metrics(cube, cube_events);
  add(report, "cube-line-events", "single-cube line congestion events", "0",
      std::to_string(cube_metrics.line_event_count));
  add(report, "cube-full-nodes", "single-cube fully congested nodes", "0",
      std::to_string(cube_metrics.full_nodes.size()));
  add(report, "cube-point-coordinates", "single-cube point congestion coordinates",
      "7", std::to_string(cube_metrics.point_coordinate_count));

  const auto node2_events = pairwise_congestion(node2);
  const GridNode shared_node{1, 1, 1};
  const bool shared_full = std::any_of(
      node2_events.begin(), node2_events.end(), [&shared_node](const CongestionEvent& ev) {
        return ev.kind == CongestionKind::kFull && ev.at_node == shared_node;
      });
  add(report, "node-sharing-shared-node-full",
      "node-sharing shared node is fully congested", "true",
      shared_full ? "true" : "false");
  add(report, "node-sharing-unit-links-line-congested",
      "all unit links of the fully congested shared node are line congested", "true",
      shared_full && unit_links_line_congested(node2, shared_node, node2_events) ? "true"
                                                                        : "false");

  const CenterCoverage coverage = center_cube_coverage(3, 3, 3);
  add(report, "lattice-3x3x3-center-links", "central-cube link total in the 3x3x3 lattice",
      "28", std::to_string(coverage.center_links));
  add(report, "lattice-3x3x3-center-coverage",
      "every central-cube link of the 3x3x3 lattice is congested", "true",
      coverage.all_congested ? "true" : "false");

  PlayerProblem two_node;
  two_node.player = 0;
  two_node.destinations = {1};
  two_node.benefits = {Rational(3)};
  two_node.delivery_costs = {Rational(1)};
  two_node.storage_cost = Rational(2);
  const BestResponse br = best_response(two_node);
  add(report, "two-node-best-response", "two-node best response delivers everything",
      "self=0/1 to=[1/1] value=2/1",
      "self=" + br.representative.self.str() + " to=[" + br.representative.to[0].str() +
          "] value=" + br.value.str());

  return report;
}

}  // namespace cubenet
