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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubenet/network.hpp"

namespace cubenet {

/// The three congestion classes:
///  - Point: two links cross at a single coordinate that is not a node.
///  - Line:  two links share a positive-length collinear sub-segment.
///  - Full:  two links cross exactly at a node, the crossing interior to
///           at least one of them.
enum class CongestionKind { kPoint, kLine, kFull };

std::string to_string(CongestionKind kind);

/// One classified interaction between a pair of links.
struct CongestionEvent {
  CongestionKind kind;
  std::size_t link_a;  // indices into Network::links, link_a < link_b
  std::size_t link_b;
  std::optional<RationalPoint3> locus_point;  // Point / Full
  std::optional<Segment> locus_segment;       // Line
  std::optional<GridNode> at_node;            // Full only
  bool external = false;   // locus (segment midpoint for Line) outside the cube union
  bool covers_unit_link = false;  // Line only: overlap contains a whole Unit link
};

/// Point/Full loci grouped by exact coordinate. The mapped set holds every
/// link passing through the locus; size >= 2 for every entry.
struct CongestionMap {
  std::map<RationalPoint3, std::set<std::size_t>> point_multiplicity;
  std::vector<CongestionEvent> events;
};

/// Links as vertices, an edge between two links that share at least one
/// congestion event.
struct ConflictGraph {
  std::size_t link_count = 0;
  std::vector<std::set<std::size_t>> adjacency;  // one set per link
  const Network* net = nullptr;                  // for tie-breaking by endpoints
};

/// Aggregate congestion statistics for a network.
struct ParadoxMetrics {
  std::size_t links_total = 0;
  std::size_t links_congested = 0;
  Rational fraction_congested;
  std::size_t point_coordinate_count = 0;  // distinct Point loci
  std::vector<GridNode> full_nodes;        // distinct Full loci
  std::size_t external_count = 0;
  std::size_t line_event_count = 0;
};

/// Congestion restricted to the 28 links spanned by the central cube's nodes.
struct CenterCoverage {
  std::size_t center_links = 0;
  std::size_t congested = 0;
  bool all_congested = false;
};

/// Classifies every unordered link pair of the complete network:
///   Empty                         -> no event
///   exactly a shared endpoint     -> no event (incidence, not congestion)
///   positive-length overlap       -> Line
///   point equal to a network node -> Full (the point is then interior to
///                                    at least one of the two links)
///   any other point               -> Point
/// The event list is ordered by (link_a, link_b); output is deterministic.
std::vector<CongestionEvent> pairwise_congestion(const Network& net);

/// Groups Point/Full events by exact locus.
CongestionMap congestion_coordinates(const std::vector<CongestionEvent>& events);

/// Point-congestion loci where new cross-cube congestion lands on a
/// pre-existing intra-structure congestion coordinate: at least two
/// participating links lie within a single cube's corner set and at least
/// one spans different cubes. Node loci are full congestion, not point
/// congestion, and are excluded.
std::vector<RationalPoint3> redundant_points(const Network& net, const CongestionMap& m);

/// Events whose locus lies outside the closed union of the network's cubes.
std::vector<CongestionEvent> externality_report(const std::vector<CongestionEvent>& events);

/// True iff every Unit link incident to `node` takes part in at least one
/// Line event. Precondition: `node` is the locus of some Full event;
/// violated -> ValidationError.
bool unit_links_line_congested(const Network& net, const GridNode& node,
                      const std::vector<CongestionEvent>& events);

ParadoxMetrics paradox_metrics(const Network& net,
                               const std::vector<CongestionEvent>& events);
ParadoxMetrics paradox_metrics(const Network& net);

/// Requires nx, ny, nz >= 3 and odd so a central cube exists.
CenterCoverage center_cube_coverage(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                                    std::size_t node_cap = kDefaultNodeCap);

ConflictGraph conflict_graph(const Network& net,
                             const std::vector<CongestionEvent>& events);

/// Deterministic maximal conflict-free link set: greedy over links sorted by
/// ascending conflict degree, ties by lexicographic endpoint order. No two
/// returned links share a congestion event, and no excluded link can be
/// added without a conflict. Returns sorted link indices.
std::vector<std::size_t> permit_assignment(const ConflictGraph& graph);

}  // namespace cubenet
