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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubenet/rational.hpp"

namespace cubenet {

/// Exact 3D point. Componentwise equality and lexicographic ordering.
struct RationalPoint3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const RationalPoint3&, const RationalPoint3&) = default;
  friend std::strong_ordering operator<=>(const RationalPoint3& a, const RationalPoint3& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }

  /// "(p/q, p/q, p/q)"
  std::string str() const;
};

/// Closed segment with distinct endpoints. Unordered: endpoints are stored
/// in lexicographic order, so Segment(a,b) == Segment(b,a).
class Segment {
 public:
  Segment(RationalPoint3 a, RationalPoint3 b);

  const RationalPoint3& a() const { return a_; }
  const RationalPoint3& b() const { return b_; }

  friend bool operator==(const Segment&, const Segment&) = default;

  std::string str() const;

 private:
  RationalPoint3 a_;
  RationalPoint3 b_;
};

/// Closed axis-aligned box with integer corners, min < max componentwise.
/// Every cube volume built by this library has max - min = (1,1,1).
struct Box3 {
  std::array<std::int64_t, 3> min_corner;
  std::array<std::int64_t, 3> max_corner;

  Box3(std::array<std::int64_t, 3> mn, std::array<std::int64_t, 3> mx);

  bool contains(const RationalPoint3& p) const;

  friend bool operator==(const Box3&, const Box3&) = default;
};

/// Exact segment-pair classification: disjoint, a single common point, or a
/// positive-length collinear overlap. Collinear segments touching at exactly
/// one point classify as Point, not Overlap.
struct IntersectionResult {
  enum class Kind { kEmpty, kPoint, kOverlap };

  Kind kind = Kind::kEmpty;
  std::optional<RationalPoint3> point;   // set iff kind == kPoint
  std::optional<Segment> overlap;        // set iff kind == kOverlap

  static IntersectionResult Empty() { return {}; }
  static IntersectionResult Point(RationalPoint3 p) {
    IntersectionResult r;
    r.kind = Kind::kPoint;
    r.point = std::move(p);
    return r;
  }
  static IntersectionResult Overlap(Segment s) {
    IntersectionResult r;
    r.kind = Kind::kOverlap;
    r.overlap = std::move(s);
    return r;
  }

  bool empty() const { return kind == Kind::kEmpty; }
};

/// Total, exact, symmetric in its arguments. No floating point anywhere.
IntersectionResult intersect_segments(const Segment& s1, const Segment& s2);

/// True iff p lies in the closed union of the boxes.
/// Throws ValidationError on an empty box list.
bool point_in_box_union(const RationalPoint3& p, const std::vector<Box3>& boxes);

/// True iff p lies on s (endpoints included).
bool point_on_segment(const RationalPoint3& p, const Segment& s);

/// True iff p lies on s and is not an endpoint of s.
bool point_interior_to_segment(const RationalPoint3& p, const Segment& s);

}  // namespace cubenet
