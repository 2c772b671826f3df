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

#include "cubenet/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "cubenet/errors.hpp"

using namespace cubenet;

namespace {

RationalPoint3 pt(long long x, long long y, long long z) {
  return {Rational(x), Rational(y), Rational(z)};
}

Segment seg(long long ax, long long ay, long long az, long long bx, long long by,
            long long bz) {
  return Segment(pt(ax, ay, az), pt(bx, by, bz));
}

double fdist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

std::array<double, 3> flerp(const Segment& s, double t) {
  const double ax = s.a().x.to_double(), ay = s.a().y.to_double(),
               az = s.a().z.to_double();
  const double bx = s.b().x.to_double(), by = s.b().y.to_double(),
               bz = s.b().z.to_double();
  return {ax + t * (bx - ax), ay + t * (by - ay), az + t * (bz - az)};
}

// Rasterized proximity probe at parameter steps k/1000. Used to flag
// suspects only; the exact result stays authoritative. Early-exits once the
// sampled distance crosses the probe threshold.
double raster_min_dist2(const Segment& s1, const Segment& s2, double stop_below) {
  double best = 1e300;
  for (int k = 0; k <= 1000; ++k) {
    const auto p = flerp(s1, k / 1000.0);
    for (int m = 0; m <= 1000; ++m) {
      const double d = fdist2(p, flerp(s2, m / 1000.0));
      if (d < best) {
        best = d;
        if (best < stop_below) return best;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("unit square diagonals cross at the center") {
  const auto r = intersect_segments(seg(0, 0, 0, 1, 1, 0), seg(1, 0, 0, 0, 1, 0));
  REQUIRE(r.kind == IntersectionResult::Kind::kPoint);
  CHECK(*r.point == RationalPoint3{Rational(1, 2), Rational(1, 2), Rational(0)});
}

TEST_CASE("collinear segments overlap on their common part") {
  const auto r = intersect_segments(seg(0, 0, 0, 2, 0, 0), seg(1, 0, 0, 3, 0, 0));
  REQUIRE(r.kind == IntersectionResult::Kind::kOverlap);
  CHECK(*r.overlap == seg(1, 0, 0, 2, 0, 0));
}

TEST_CASE("skew-frame diagonals meet at the body center") {
  // (t,t,t) = (1-s,s,s) forces t = s and t = 1-s, so t = 1/2.
  const auto r = intersect_segments(seg(0, 0, 0, 1, 1, 1), seg(1, 0, 0, 0, 1, 1));
  REQUIRE(r.kind == IntersectionResult::Kind::kPoint);
  const RationalPoint3 center{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(*r.point == center);
  CHECK(point_on_segment(center, seg(0, 0, 0, 1, 1, 1)));
  CHECK(point_on_segment(center, seg(1, 0, 0, 0, 1, 1)));
}

TEST_CASE("parallel disjoint segments are empty") {
  CHECK(intersect_segments(seg(0, 0, 0, 1, 0, 0), seg(0, 1, 1, 1, 1, 1)).empty());
}

TEST_CASE("skew segments are empty") {
  CHECK(intersect_segments(seg(0, 0, 0, 1, 1, 0), seg(0, 0, 1, 1, 0, 2)).empty());
}

TEST_CASE("collinear single-point touch classifies as a point") {
  const auto r = intersect_segments(seg(0, 0, 0, 1, 0, 0), seg(1, 0, 0, 2, 0, 0));
  REQUIRE(r.kind == IntersectionResult::Kind::kPoint);
  CHECK(*r.point == pt(1, 0, 0));
}

TEST_CASE("degenerate segments are rejected") {
  CHECK_THROWS_AS(Segment(pt(1, 2, 3), pt(1, 2, 3)), ValidationError);
}

TEST_CASE("segments are unordered") {
  CHECK(Segment(pt(1, 1, 1), pt(0, 0, 0)) == Segment(pt(0, 0, 0), pt(1, 1, 1)));
}

TEST_CASE("point in box union") {
  const std::vector<Box3> one = {Box3({0, 0, 0}, {1, 1, 1})};
  CHECK(point_in_box_union({Rational(1, 2), Rational(1, 2), Rational(1, 2)}, one));
  CHECK_FALSE(point_in_box_union({Rational(3, 2), Rational(1, 2), Rational(0)}, one));

  const std::vector<Box3> two = {Box3({0, 0, 0}, {1, 1, 1}), Box3({1, 1, 1}, {2, 2, 2})};
  CHECK(point_in_box_union(pt(1, 1, 1), two));  // shared boundary node

  CHECK_THROWS_AS(point_in_box_union(pt(0, 0, 0), {}), ValidationError);
}

TEST_CASE("segment interiority") {
  CHECK(point_interior_to_segment(pt(1, 1, 1), seg(0, 0, 0, 2, 2, 2)));
  CHECK_FALSE(point_interior_to_segment(pt(0, 0, 0), seg(0, 0, 0, 2, 2, 2)));
  CHECK_FALSE(point_interior_to_segment(pt(1, 0, 0), seg(0, 0, 0, 0, 0, 1)));
  CHECK(point_on_segment(pt(0, 0, 0), seg(0, 0, 0, 2, 2, 2)));
}

TEST_CASE("symmetry and soundness on random lattice segments") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> coord(0, 2);
  auto random_segment = [&]() {
    while (true) {
      const RationalPoint3 a = pt(coord(gen), coord(gen), coord(gen));
      const RationalPoint3 b = pt(coord(gen), coord(gen), coord(gen));
      if (!(a == b)) return Segment(a, b);
    }
  };

  for (int trial = 0; trial < 3000; ++trial) {
    const Segment s1 = random_segment();
    const Segment s2 = random_segment();
    const auto r12 = intersect_segments(s1, s2);
    const auto r21 = intersect_segments(s2, s1);

    CHECK(r12.kind == r21.kind);
    switch (r12.kind) {
      case IntersectionResult::Kind::kEmpty:
        break;
      case IntersectionResult::Kind::kPoint:
        CHECK(*r12.point == *r21.point);
        CHECK(point_on_segment(*r12.point, s1));
        CHECK(point_on_segment(*r12.point, s2));
        break;
      case IntersectionResult::Kind::kOverlap: {
        CHECK(*r12.overlap == *r21.overlap);
        const Segment& ov = *r12.overlap;
        CHECK_FALSE(ov.a() == ov.b());
        for (const RationalPoint3* end : {&ov.a(), &ov.b()}) {
          CHECK(point_on_segment(*end, s1));
          CHECK(point_on_segment(*end, s2));
        }
        break;
      }
    }
  }
}

TEST_CASE("raster probe agrees with the exact classification") {
  // Integer endpoints in {0,1,2}^3 leave a sizeable gap between disjoint
  // segments, so the k/1000 raster separates hit from miss cleanly.
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> coord(0, 2);
  auto random_segment = [&]() {
    while (true) {
      const RationalPoint3 a = pt(coord(gen), coord(gen), coord(gen));
      const RationalPoint3 b = pt(coord(gen), coord(gen), coord(gen));
      if (!(a == b)) return Segment(a, b);
    }
  };

  int hits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Segment s1 = random_segment();
    const Segment s2 = random_segment();
    const auto r = intersect_segments(s1, s2);
    if (r.empty()) {
      CHECK(raster_min_dist2(s1, s2, 1e-14) > 1e-14);
    } else {
      CHECK(raster_min_dist2(s1, s2, 1e-4) < 4e-4);
      ++hits;
    }
  }
  CHECK(hits > 10);  // the sample must exercise both branches
}
