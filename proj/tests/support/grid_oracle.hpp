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

// Test-only brute-force oracle for the player problem: enumerates every
// allocation on the simplex grid with a fixed step and evaluates the payoff
// in exact scaled-integer arithmetic. Independent of best_response and
// kt_verify.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "cubenet/equilibrium.hpp"

namespace cubenet::testing {

/// Payoff weights scaled to a common integer denominator: weight(storage)
/// is -storage_cost * D, weight(destination k) is net benefit * D.
struct ScaledWeights {
  std::vector<std::int64_t> w;  // w[0] storage, w[1..] destinations
  std::int64_t denominator = 1;
};

inline ScaledWeights scale_weights(const PlayerProblem& p) {
  BigInt lcm = p.storage_cost.denominator();
  for (std::size_t k = 0; k < p.destinations.size(); ++k) {
    const BigInt den = p.net_benefit(k).denominator();
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  ScaledWeights sw;
  sw.denominator = static_cast<std::int64_t>(lcm);
  const Rational scale(lcm);
  sw.w.push_back(static_cast<std::int64_t>((-p.storage_cost * scale).numerator()));
  for (std::size_t k = 0; k < p.destinations.size(); ++k) {
    sw.w.push_back(static_cast<std::int64_t>((p.net_benefit(k) * scale).numerator()));
  }
  return sw;
}

/// Exact scaled payoff of one grid composition: sum of w[i] * shares[i].
/// The true payoff is this divided by (denominator * step).
inline std::int64_t scaled_payoff(const ScaledWeights& sw,
                                  const std::vector<int>& shares) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) total += sw.w[i] * shares[i];
  return total;
}

/// Maximum scaled payoff over every composition of `step` into the
/// coordinates, by full enumeration with an O(1) leaf loop.
inline std::int64_t grid_max(const ScaledWeights& sw, int step) {
  const std::size_t dims = sw.w.size();
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  // shares[0..dims-2] enumerated, the last coordinate takes the remainder.
  std::function<void(std::size_t, int, std::int64_t)> recurse =
      [&](std::size_t i, int rem, std::int64_t partial) {
        if (i + 2 == dims) {
          for (int k = 0; k <= rem; ++k) {
            const std::int64_t value =
                partial + sw.w[i] * k + sw.w[i + 1] * (rem - k);
            if (value > best) best = value;
          }
          return;
        }
        for (int k = 0; k <= rem; ++k) {
          recurse(i + 1, rem - k, partial + sw.w[i] * k);
        }
      };
  if (dims == 1) {
    best = sw.w[0] * step;
  } else {
    recurse(0, step, 0);
  }
  return best;
}

/// Visits every composition of `step` into `dims` coordinates.
inline void for_each_composition(int step, std::size_t dims,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> shares(dims, 0);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t i, int rem) {
    if (i + 1 == dims) {
      shares[i] = rem;
      fn(shares);
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      shares[i] = k;
      recurse(i + 1, rem - k);
    }
  };
  recurse(0, step);
}

/// Grid composition -> exact allocation with shares k/step.
inline Allocation allocation_from_shares(const std::vector<int>& shares, int step) {
  Allocation x;
  x.self = Rational(shares[0], step);
  for (std::size_t i = 1; i < shares.size(); ++i) {
    x.to.push_back(Rational(shares[i], step));
  }
  return x;
}

}  // namespace cubenet::testing
