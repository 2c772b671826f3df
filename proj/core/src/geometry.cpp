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

#include <algorithm>
#include <utility>

namespace cubenet {
namespace {

using Vec3 = std::array<BigInt, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

BigInt dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// The intersection arithmetic runs on integer coordinates: all eight point
// coordinates are scaled by the lcm of their denominators up front, and
// rationals reappear only in the returned loci. Keeps the all-pairs sweep
// on cheap integer ops for lattice inputs (denominators all 1).
struct ScaledPair {
  Vec3 a, b, c, d;
  BigInt scale;
};

ScaledPair scaled(const Segment& s1, const Segment& s2) {
  const RationalPoint3* pts[4] = {&s1.a(), &s1.b(), &s2.a(), &s2.b()};
  BigInt l = 1;
  for (const auto* p : pts) {
    l = lcm(l, p->x.denominator());
    l = lcm(l, p->y.denominator());
    l = lcm(l, p->z.denominator());
  }
  auto vec = [&l](const RationalPoint3& p) -> Vec3 {
    return {p.x.numerator() * (l / p.x.denominator()),
            p.y.numerator() * (l / p.y.denominator()),
            p.z.numerator() * (l / p.z.denominator())};
  };
  return {vec(*pts[0]), vec(*pts[1]), vec(*pts[2]), vec(*pts[3]), l};
}

// Point at parameter t = tn/td along the scaled segment a + t(b-a),
// mapped back to unscaled coordinates (divide by `scale`).
RationalPoint3 point_at(const Vec3& a, const Vec3& u, const BigInt& tn,
                        const BigInt& td, const BigInt& scale) {
  return {Rational(a[0] * td + tn * u[0], td * scale),
          Rational(a[1] * td + tn * u[1], td * scale),
          Rational(a[2] * td + tn * u[2], td * scale)};
}

}  // namespace

std::string RationalPoint3::str() const {
  return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

Segment::Segment(RationalPoint3 a, RationalPoint3 b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) {
    throw ValidationError("degenerate segment: endpoints coincide at " + a_.str());
  }
  if (b_ < a_) std::swap(a_, b_);
}

std::string Segment::str() const { return a_.str() + "-" + b_.str(); }

Box3::Box3(std::array<std::int64_t, 3> mn, std::array<std::int64_t, 3> mx)
    : min_corner(mn), max_corner(mx) {
  for (int i = 0; i < 3; ++i) {
    if (!(min_corner[i] < max_corner[i])) {
      throw ValidationError("box min corner must be strictly below max corner");
    }
  }
}

bool Box3::contains(const RationalPoint3& p) const {
  const Rational* c[3] = {&p.x, &p.y, &p.z};
  for (int i = 0; i < 3; ++i) {
    if (*c[i] < Rational(min_corner[i]) || Rational(max_corner[i]) < *c[i]) {
      return false;
    }
  }
  return true;
}

IntersectionResult intersect_segments(const Segment& s1, const Segment& s2) {
  const ScaledPair sp = scaled(s1, s2);
  const Vec3 u = sub(sp.b, sp.a);
  const Vec3 w = sub(sp.d, sp.c);
  const Vec3 ac = sub(sp.c, sp.a);
  const Vec3 cx = cross(u, w);

  if (!is_zero(cx)) {
    // Non-parallel lines: they meet iff coplanar.
    if (dot(ac, cx) != 0) {
      return IntersectionResult::Empty();  // skew
    }
    const BigInt den = dot(cx, cx);
    const BigInt tn = dot(cross(ac, w), cx);
    if (tn < 0 || tn > den) return IntersectionResult::Empty();
    const BigInt sn = dot(cross(ac, u), cx);
    if (sn < 0 || sn > den) return IntersectionResult::Empty();
    return IntersectionResult::Point(point_at(sp.a, u, tn, den, sp.scale));
  }

  // Parallel lines: disjoint unless collinear.
  if (!is_zero(cross(ac, u))) {
    return IntersectionResult::Empty();
  }

  // Collinear: project s2's endpoints onto s1's parameter axis. All
  // parameters share the positive denominator u.u, so numerators compare.
  const BigInt uu = dot(u, u);
  BigInt tc = dot(ac, u);
  BigInt td = dot(sub(sp.d, sp.a), u);
  if (td < tc) std::swap(tc, td);
  const BigInt lo = std::max(BigInt(0), tc);
  const BigInt hi = std::min(uu, td);
  if (lo > hi) {
    return IntersectionResult::Empty();
  }
  if (lo == hi) {
    // Single-point collinear touch.
    return IntersectionResult::Point(point_at(sp.a, u, lo, uu, sp.scale));
  }
  return IntersectionResult::Overlap(Segment(point_at(sp.a, u, lo, uu, sp.scale),
                                             point_at(sp.a, u, hi, uu, sp.scale)));
}

bool point_in_box_union(const RationalPoint3& p, const std::vector<Box3>& boxes) {
  if (boxes.empty()) {
    throw ValidationError("point_in_box_union requires a non-empty box list");
  }
  return std::any_of(boxes.begin(), boxes.end(),
                     [&p](const Box3& b) { return b.contains(p); });
}

bool point_on_segment(const RationalPoint3& p, const Segment& s) {
  // p on segment iff (p-a) x (b-a) = 0 and 0 <= (p-a).(b-a) <= (b-a).(b-a).
  const Rational ux = s.b().x - s.a().x;
  const Rational uy = s.b().y - s.a().y;
  const Rational uz = s.b().z - s.a().z;
  const Rational px = p.x - s.a().x;
  const Rational py = p.y - s.a().y;
  const Rational pz = p.z - s.a().z;
  if (!(py * uz - pz * uy).is_zero()) return false;
  if (!(pz * ux - px * uz).is_zero()) return false;
  if (!(px * uy - py * ux).is_zero()) return false;
  const Rational t = px * ux + py * uy + pz * uz;
  const Rational len2 = ux * ux + uy * uy + uz * uz;
  return !(t < Rational(0)) && !(len2 < t);
}

bool point_interior_to_segment(const RationalPoint3& p, const Segment& s) {
  if (p == s.a() || p == s.b()) return false;
  return point_on_segment(p, s);
}

}  // namespace cubenet
