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

#include "cubenet/network.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "cubenet/errors.hpp"

namespace cubenet {
namespace {

Network complete_network(std::set<GridNode> node_set, std::vector<Box3> cubes,
                         std::string label) {
  Network net;
  net.nodes.assign(node_set.begin(), node_set.end());
  net.links.reserve(net.nodes.size() * (net.nodes.size() - 1) / 2);
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < net.nodes.size(); ++j) {
      net.links.emplace_back(net.nodes[i], net.nodes[j]);
    }
  }
  net.cubes = std::move(cubes);
  net.label = std::move(label);
  return net;
}

std::set<GridNode> cube_corners(std::int64_t x, std::int64_t y, std::int64_t z) {
  std::set<GridNode> corners;
  for (std::int64_t dx = 0; dx <= 1; ++dx)
    for (std::int64_t dy = 0; dy <= 1; ++dy)
      for (std::int64_t dz = 0; dz <= 1; ++dz)
        corners.insert({x + dx, y + dy, z + dz});
  return corners;
}

Box3 unit_box(std::int64_t x, std::int64_t y, std::int64_t z) {
  return Box3({x, y, z}, {x + 1, y + 1, z + 1});
}

}  // namespace

std::string GridNode::str() const {
  return std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n);
}

std::string to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::kUnit: return "Unit";
    case LinkKind::kPlanarDiagonal: return "PlanarDiagonal";
    case LinkKind::kSpatialDiagonal: return "SpatialDiagonal";
    case LinkKind::kLongPlanarDiagonal: return "LongPlanarDiagonal";
    case LinkKind::kLongSpatialDiagonal: return "LongSpatialDiagonal";
    case LinkKind::kLongEdge: return "LongEdge";
    case LinkKind::kOther: return "Other";
  }
  return "Other";
}

LinkKind link_kind_from_string(const std::string& name) {
  static const std::map<std::string, LinkKind> table = {
      {"Unit", LinkKind::kUnit},
      {"PlanarDiagonal", LinkKind::kPlanarDiagonal},
      {"SpatialDiagonal", LinkKind::kSpatialDiagonal},
      {"LongPlanarDiagonal", LinkKind::kLongPlanarDiagonal},
      {"LongSpatialDiagonal", LinkKind::kLongSpatialDiagonal},
      {"LongEdge", LinkKind::kLongEdge},
      {"Other", LinkKind::kOther},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    throw ValidationError("unknown link kind '" + name + "'");
  }
  return it->second;
}

Link::Link(GridNode na, GridNode nb)
    : a(na < nb ? na : nb),
      b(na < nb ? nb : na),
      kind(classify_link(na, nb)),
      segment(a.point(), b.point()) {}

std::string to_string(SharingMode mode) {
  switch (mode) {
    case SharingMode::kPlane: return "plane";
    case SharingMode::kEdge: return "edge";
    case SharingMode::kNode: return "node";
  }
  return "plane";
}

std::optional<std::size_t> Network::node_index(const GridNode& node) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
  if (it != nodes.end() && *it == node) {
    return static_cast<std::size_t>(it - nodes.begin());
  }
  return std::nullopt;
}

std::optional<GridNode> Network::node_at(const RationalPoint3& p) const {
  if (!p.x.is_integer() || !p.y.is_integer() || !p.z.is_integer()) {
    return std::nullopt;
  }
  GridNode node{static_cast<std::int64_t>(p.x.numerator()),
                static_cast<std::int64_t>(p.y.numerator()),
                static_cast<std::int64_t>(p.z.numerator())};
  if (is_node(node)) return node;
  return std::nullopt;
}

Network build_linear() {
  return complete_network({{0, 0, 0}, {1, 0, 0}}, {}, "linear");
}

Network build_plane() {
  return complete_network({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {}, "plane");
}

Network build_cube() {
  return complete_network(cube_corners(0, 0, 0), {unit_box(0, 0, 0)}, "cube");
}

Network build_two_cube(SharingMode mode) {
  std::array<std::int64_t, 3> second{};
  switch (mode) {
    case SharingMode::kPlane: second = {0, 0, 1}; break;
    case SharingMode::kEdge: second = {1, 1, 0}; break;
    case SharingMode::kNode: second = {1, 1, 1}; break;
  }
  std::set<GridNode> first_corners = cube_corners(0, 0, 0);
  std::set<GridNode> second_corners = cube_corners(second[0], second[1], second[2]);

  std::set<GridNode> nodes = first_corners;
  nodes.insert(second_corners.begin(), second_corners.end());

  Network net = complete_network(
      std::move(nodes),
      {unit_box(0, 0, 0), unit_box(second[0], second[1], second[2])},
      "two-cube:" + to_string(mode));

  SharedFeature shared;
  shared.mode = mode;
  std::set_intersection(first_corners.begin(), first_corners.end(),
                        second_corners.begin(), second_corners.end(),
                        std::back_inserter(shared.nodes));
  net.shared = std::move(shared);
  return net;
}

Network build_lattice(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                      std::size_t node_cap) {
  if (nx < 1 || ny < 1 || nz < 1) {
    throw ValidationError("lattice dimensions must be positive");
  }
  const std::size_t node_count =
      static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1) *
      static_cast<std::size_t>(nz + 1);
  if (node_count > node_cap) {
    throw SizeError("lattice of " + std::to_string(node_count) +
                    " nodes exceeds the node cap of " + std::to_string(node_cap));
  }
  std::set<GridNode> nodes;
  for (std::int64_t x = 0; x <= nx; ++x)
    for (std::int64_t y = 0; y <= ny; ++y)
      for (std::int64_t z = 0; z <= nz; ++z)
        nodes.insert({x, y, z});
  std::vector<Box3> cubes;
  cubes.reserve(static_cast<std::size_t>(nx * ny * nz));
  for (std::int64_t x = 0; x < nx; ++x)
    for (std::int64_t y = 0; y < ny; ++y)
      for (std::int64_t z = 0; z < nz; ++z)
        cubes.push_back(unit_box(x, y, z));
  return complete_network(std::move(nodes), std::move(cubes),
                          "lattice:" + std::to_string(nx) + "," +
                              std::to_string(ny) + "," + std::to_string(nz));
}

LinkKind classify_link(const GridNode& a, const GridNode& b) {
  if (a == b) {
    throw ValidationError("cannot classify a link from a node to itself");
  }
  const auto gap = [](std::int64_t x, std::int64_t y) { return x < y ? y - x : x - y; };
  std::array<std::int64_t, 3> d = {gap(a.l, b.l), gap(a.m, b.m), gap(a.n, b.n)};
  std::sort(d.begin(), d.end(), std::greater<>());
  if (d == std::array<std::int64_t, 3>{1, 0, 0}) return LinkKind::kUnit;
  if (d == std::array<std::int64_t, 3>{1, 1, 0}) return LinkKind::kPlanarDiagonal;
  if (d == std::array<std::int64_t, 3>{1, 1, 1}) return LinkKind::kSpatialDiagonal;
  if (d == std::array<std::int64_t, 3>{2, 1, 0}) return LinkKind::kLongPlanarDiagonal;
  if (d == std::array<std::int64_t, 3>{2, 1, 1}) return LinkKind::kLongSpatialDiagonal;
  if (d == std::array<std::int64_t, 3>{2, 0, 0}) return LinkKind::kLongEdge;
  return LinkKind::kOther;
}

std::map<LinkKind, std::size_t> link_census(const Network& net) {
  std::map<LinkKind, std::size_t> census;
  for (const Link& link : net.links) {
    ++census[link.kind];
  }
  return census;
}

}  // namespace cubenet
