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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubenet/geometry.hpp"

namespace cubenet {

/// Lattice node identified by its integer coordinates.
struct GridNode {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const GridNode&, const GridNode&) = default;
  friend auto operator<=>(const GridNode&, const GridNode&) = default;

  RationalPoint3 point() const { return {Rational(l), Rational(m), Rational(n)}; }
  std::string str() const;
};

/// Link taxonomy, determined solely by the sorted absolute displacement
/// between endpoints:
///   (1,0,0) Unit           (1,1,0) PlanarDiagonal     (1,1,1) SpatialDiagonal
///   (2,1,0) LongPlanarDiagonal  (2,1,1) LongSpatialDiagonal  (2,0,0) LongEdge
/// and anything else Other.
enum class LinkKind {
  kUnit,
  kPlanarDiagonal,
  kSpatialDiagonal,
  kLongPlanarDiagonal,
  kLongSpatialDiagonal,
  kLongEdge,
  kOther,
};

std::string to_string(LinkKind kind);
LinkKind link_kind_from_string(const std::string& name);

/// Undirected link of the complete delivery network. Endpoints are stored
/// with a < b (lexicographic), matching the segment's canonical order.
struct Link {
  GridNode a;
  GridNode b;
  LinkKind kind;
  Segment segment;

  Link(GridNode a, GridNode b);

  friend bool operator==(const Link& x, const Link& y) {
    return x.a == y.a && x.b == y.b;
  }
};

enum class SharingMode { kPlane, kEdge, kNode };

std::string to_string(SharingMode mode);

/// How two cubes are glued together; populated by build_two_cube.
struct SharedFeature {
  SharingMode mode;
  std::vector<GridNode> nodes;  // the shared plane corners / edge ends / node
};

/// Complete delivery network on lattice nodes: every unordered node pair is
/// a link, so |links| == |nodes| * (|nodes|-1) / 2. Immutable after
/// construction; nodes and links are kept in lexicographic order so that all
/// derived outputs are byte-stable.
struct Network {
  std::vector<GridNode> nodes;
  std::vector<Link> links;
  std::vector<Box3> cubes;
  std::string label;
  std::optional<SharedFeature> shared;

  /// Index into `nodes`, or nullopt if absent.
  std::optional<std::size_t> node_index(const GridNode& node) const;
  bool is_node(const GridNode& node) const { return node_index(node).has_value(); }

  /// Node whose coordinates equal p exactly, if any.
  std::optional<GridNode> node_at(const RationalPoint3& p) const;
};

inline constexpr std::size_t kDefaultNodeCap = 64;

/// Two nodes, one unit link, no cube volume.
Network build_linear();

/// Unit square in the z=0 plane: four nodes, six links.
Network build_plane();

/// Unit cube: eight nodes, 28 links, one cube volume.
Network build_cube();

/// Two unit cubes sharing a plane, an edge, or a node. Canonical placements:
///   Plane: [0,1]^2 x [0,1] and [0,1]^2 x [1,2]   (12 nodes, 66 links)
///   Edge:  [0,1]^3 and [1,2] x [1,2] x [0,1]     (14 nodes, 91 links)
///   Node:  [0,1]^3 and [1,2]^3                   (15 nodes, 105 links)
Network build_two_cube(SharingMode mode);

/// Full nx x ny x nz lattice of unit cubes over [0,nx] x [0,ny] x [0,nz].
/// Throws SizeError when the node count exceeds `node_cap`.
Network build_lattice(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                      std::size_t node_cap = kDefaultNodeCap);

/// Sorted-absolute-displacement classification. Throws ValidationError
/// when a == b.
LinkKind classify_link(const GridNode& a, const GridNode& b);

/// Link counts per kind; values sum to |links|.
std::map<LinkKind, std::size_t> link_census(const Network& net);

}  // namespace cubenet
