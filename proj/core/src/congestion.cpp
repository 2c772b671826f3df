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

#include "cubenet/congestion.hpp"

#include <algorithm>
#include <numeric>

#include "cubenet/errors.hpp"

namespace cubenet {
namespace {

bool outside_cubes(const RationalPoint3& p, const std::vector<Box3>& cubes) {
  // Networks without cube volumes have no externality notion.
  if (cubes.empty()) return false;
  return !point_in_box_union(p, cubes);
}

RationalPoint3 midpoint(const Segment& s) {
  const Rational half(1, 2);
  return {(s.a().x + s.b().x) * half, (s.a().y + s.b().y) * half,
          (s.a().z + s.b().z) * half};
}

// A positive-length overlap can contain a whole unit link only when it runs
// along a lattice line: one axis varies, the two fixed coordinates are
// integers, and the varying range spans [k, k+1] for some integer k.
bool overlap_covers_unit_link(const Segment& overlap) {
  const RationalPoint3& p = overlap.a();
  const RationalPoint3& q = overlap.b();
  const Rational* ps[3] = {&p.x, &p.y, &p.z};
  const Rational* qs[3] = {&q.x, &q.y, &q.z};
  int axis = -1;
  for (int i = 0; i < 3; ++i) {
    if (*ps[i] == *qs[i]) continue;
    if (axis != -1) return false;  // varies along more than one axis
    axis = i;
  }
  for (int i = 0; i < 3; ++i) {
    if (i != axis && !ps[i]->is_integer()) return false;
  }
  Rational lo = *ps[axis];
  Rational hi = *qs[axis];
  if (hi < lo) std::swap(lo, hi);
  // Smallest integer k with k >= lo, via floor(lo) and a bump when fractional.
  BigInt k = lo.numerator() / lo.denominator();
  if (Rational(k) < lo) ++k;
  return !(hi < Rational(k + 1));
}

// True when both endpoints of the link are corners of one cube.
bool link_intra_cube(const Network& net, const Link& link) {
  for (const Box3& box : net.cubes) {
    if (box.contains(link.a.point()) && box.contains(link.b.point())) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(CongestionKind kind) {
  switch (kind) {
    case CongestionKind::kPoint: return "point";
    case CongestionKind::kLine: return "line";
    case CongestionKind::kFull: return "full";
  }
  return "point";
}

std::vector<CongestionEvent> pairwise_congestion(const Network& net) {
  std::vector<CongestionEvent> events;
  const auto& links = net.links;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Segment& si = links[i].segment;
    for (std::size_t j = i + 1; j < links.size(); ++j) {
      const Segment& sj = links[j].segment;
      IntersectionResult r = intersect_segments(si, sj);
      if (r.empty()) continue;

      CongestionEvent ev;
      ev.link_a = i;
      ev.link_b = j;

      if (r.kind == IntersectionResult::Kind::kOverlap) {
        ev.kind = CongestionKind::kLine;
        ev.locus_segment = r.overlap;
        ev.external = outside_cubes(midpoint(*r.overlap), net.cubes);
        ev.covers_unit_link = overlap_covers_unit_link(*r.overlap);
        events.push_back(std::move(ev));
        continue;
      }

      const RationalPoint3& p = *r.point;
      const bool endpoint_of_i = p == si.a() || p == si.b();
      const bool endpoint_of_j = p == sj.a() || p == sj.b();
      if (endpoint_of_i && endpoint_of_j) {
        continue;  // incidence at the shared node, not congestion
      }
      ev.external = outside_cubes(p, net.cubes);
      if (auto node = net.node_at(p)) {
        ev.kind = CongestionKind::kFull;
        ev.at_node = *node;
      } else {
        ev.kind = CongestionKind::kPoint;
      }
      ev.locus_point = p;
      events.push_back(std::move(ev));
    }
  }
  return events;
}

CongestionMap congestion_coordinates(const std::vector<CongestionEvent>& events) {
  CongestionMap map;
  map.events = events;
  for (const CongestionEvent& ev : events) {
    if (!ev.locus_point) continue;
    auto& links = map.point_multiplicity[*ev.locus_point];
    links.insert(ev.link_a);
    links.insert(ev.link_b);
  }
  return map;
}

std::vector<RationalPoint3> redundant_points(const Network& net, const CongestionMap& m) {
  std::vector<RationalPoint3> out;
  for (const auto& [locus, links] : m.point_multiplicity) {
    if (net.node_at(locus)) continue;  // full congestion, not point congestion
    std::size_t intra = 0;
    std::size_t cross = 0;
    for (std::size_t li : links) {
      if (link_intra_cube(net, net.links[li])) {
        ++intra;
      } else {
        ++cross;
      }
    }
    if (intra >= 2 && cross >= 1) {
      out.push_back(locus);
    }
  }
  return out;
}

std::vector<CongestionEvent> externality_report(const std::vector<CongestionEvent>& events) {
  std::vector<CongestionEvent> out;
  std::copy_if(events.begin(), events.end(), std::back_inserter(out),
               [](const CongestionEvent& ev) { return ev.external; });
  return out;
}

bool unit_links_line_congested(const Network& net, const GridNode& node,
                      const std::vector<CongestionEvent>& events) {
  const bool fully_congested =
      std::any_of(events.begin(), events.end(), [&node](const CongestionEvent& ev) {
        return ev.kind == CongestionKind::kFull && ev.at_node == node;
      });
  if (!fully_congested) {
    throw ValidationError("node " + node.str() +
                          " takes part in no full congestion event");
  }
  std::set<std::size_t> line_links;
  for (const CongestionEvent& ev : events) {
    if (ev.kind == CongestionKind::kLine) {
      line_links.insert(ev.link_a);
      line_links.insert(ev.link_b);
    }
  }
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const Link& link = net.links[i];
    if (link.kind != LinkKind::kUnit) continue;
    if (link.a != node && link.b != node) continue;
    if (!line_links.contains(i)) return false;
  }
  return true;
}

ParadoxMetrics paradox_metrics(const Network& net,
                               const std::vector<CongestionEvent>& events) {
  ParadoxMetrics metrics;
  metrics.links_total = net.links.size();

  std::set<std::size_t> congested;
  std::set<RationalPoint3> point_loci;
  std::set<GridNode> full_nodes;
  for (const CongestionEvent& ev : events) {
    congested.insert(ev.link_a);
    congested.insert(ev.link_b);
    switch (ev.kind) {
      case CongestionKind::kPoint:
        point_loci.insert(*ev.locus_point);
        break;
      case CongestionKind::kFull:
        full_nodes.insert(*ev.at_node);
        break;
      case CongestionKind::kLine:
        ++metrics.line_event_count;
        break;
    }
    if (ev.external) ++metrics.external_count;
  }
  metrics.links_congested = congested.size();
  metrics.fraction_congested =
      metrics.links_total == 0
          ? Rational(0)
          : Rational(BigInt(metrics.links_congested), BigInt(metrics.links_total));
  metrics.point_coordinate_count = point_loci.size();
  metrics.full_nodes.assign(full_nodes.begin(), full_nodes.end());
  return metrics;
}

ParadoxMetrics paradox_metrics(const Network& net) {
  return paradox_metrics(net, pairwise_congestion(net));
}

CenterCoverage center_cube_coverage(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                                    std::size_t node_cap) {
  for (std::int64_t d : {nx, ny, nz}) {
    if (d < 3 || d % 2 == 0) {
      throw ValidationError(
          "center-cube coverage needs odd dimensions of at least 3, got " +
          std::to_string(nx) + "," + std::to_string(ny) + "," + std::to_string(nz));
    }
  }
  const Network net = build_lattice(nx, ny, nz, node_cap);
  const std::vector<CongestionEvent> events = pairwise_congestion(net);

  const GridNode center_min{(nx - 1) / 2, (ny - 1) / 2, (nz - 1) / 2};
  auto in_center = [&center_min](const GridNode& node) {
    return node.l >= center_min.l && node.l <= center_min.l + 1 &&
           node.m >= center_min.m && node.m <= center_min.m + 1 &&
           node.n >= center_min.n && node.n <= center_min.n + 1;
  };

  std::set<std::size_t> center_links;
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    if (in_center(net.links[i].a) && in_center(net.links[i].b)) {
      center_links.insert(i);
    }
  }
  std::set<std::size_t> congested;
  for (const CongestionEvent& ev : events) {
    if (center_links.contains(ev.link_a)) congested.insert(ev.link_a);
    if (center_links.contains(ev.link_b)) congested.insert(ev.link_b);
  }

  CenterCoverage coverage;
  coverage.center_links = center_links.size();
  coverage.congested = congested.size();
  coverage.all_congested = coverage.congested == coverage.center_links;
  return coverage;
}

ConflictGraph conflict_graph(const Network& net,
                             const std::vector<CongestionEvent>& events) {
  ConflictGraph graph;
  graph.link_count = net.links.size();
  graph.adjacency.resize(net.links.size());
  graph.net = &net;
  for (const CongestionEvent& ev : events) {
    graph.adjacency[ev.link_a].insert(ev.link_b);
    graph.adjacency[ev.link_b].insert(ev.link_a);
  }
  return graph;
}

std::vector<std::size_t> permit_assignment(const ConflictGraph& graph) {
  std::vector<std::size_t> order(graph.link_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&graph](std::size_t x, std::size_t y) {
    const std::size_t dx = graph.adjacency[x].size();
    const std::size_t dy = graph.adjacency[y].size();
    if (dx != dy) return dx < dy;
    if (graph.net != nullptr) {
      const Link& lx = graph.net->links[x];
      const Link& ly = graph.net->links[y];
      return std::pair(lx.a, lx.b) < std::pair(ly.a, ly.b);
    }
    return x < y;
  });

  std::set<std::size_t> chosen;
  for (std::size_t candidate : order) {
    const auto& neighbors = graph.adjacency[candidate];
    const bool conflict = std::any_of(
        neighbors.begin(), neighbors.end(),
        [&chosen](std::size_t n) { return chosen.contains(n); });
    if (!conflict) chosen.insert(candidate);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace cubenet
