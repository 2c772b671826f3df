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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubenet/network.hpp"
#include "cubenet/rational.hpp"

namespace cubenet {

/// One player's delivery problem: a unit mass of goods to spread over the
/// destinations (or kept in storage), a benefit and delivery cost per
/// destination, and a storage cost.
///
/// Invariants: storage_cost > 0 and benefit > delivery_cost > 0 per
/// destination, with matching array lengths. `validate` names the first
/// violated field.
struct PlayerProblem {
  std::size_t player = 0;
  std::vector<std::size_t> destinations;
  std::vector<Rational> benefits;
  std::vector<Rational> delivery_costs;
  Rational storage_cost;

  void validate() const;
  Rational net_benefit(std::size_t k) const { return benefits[k] - delivery_costs[k]; }
};

/// Goods split: a storage share plus one share per destination,
/// summing to one exactly when feasible.
struct Allocation {
  Rational self;
  std::vector<Rational> to;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// 0/1 indicators of the positive coordinates of an allocation.
struct PathVector {
  int self = 0;
  std::vector<int> to;

  friend bool operator==(const PathVector&, const PathVector&) = default;
};

/// Argmax structure of a player's linear problem together with the
/// multipliers certifying optimality.
struct BestResponse {
  std::vector<std::size_t> argmax_set;  // destination node indices
  Rational value;                       // max net benefit
  Allocation representative;            // uniform over the argmax set, zero storage
  Rational mu;                          // equals `value`
  std::array<Rational, 3> lambda;       // all zero
};

/// Stationarity / feasibility audit of one allocation.
struct KTReport {
  struct Row {
    std::string variable;      // "storage" or "to[<destination node>]"
    Rational amount;
    Rational reduced_benefit;  // -storage_cost resp. net benefit
    bool on_support = false;
    Rational residual;         // reduced_benefit - mu
    bool ok = false;
  };

  bool feasible = false;
  bool support_consistent = false;
  std::optional<Rational> mu;
  std::vector<Row> rows;
  bool satisfied = false;
  std::string first_violation;  // empty iff satisfied

  std::string table() const;  // human-readable rendering
};

/// One row of the four-case path-vector table for a single-destination
/// problem.
struct VCaseRow {
  int v_self = 0;
  int v_dest = 0;
  bool feasible = false;
  std::optional<Rational> payoff;    // attained optimum under this path vector
  std::optional<Rational> supremum;  // set when the optimum is not attained
  bool dominated = false;
  std::string note;
};

/// Sigma of net benefit times share, minus storage cost times stored share.
/// Throws ValidationError when x is not an exact point of the simplex.
Rational payoff(const PlayerProblem& p, const Allocation& x);

PathVector path_vector_of(const Allocation& x);

/// Argmax destinations, optimal value, uniform representative with zero
/// storage, and the multiplier certificate (mu = value, lambda = 0).
BestResponse best_response(const PlayerProblem& p);

/// Total: never throws; infeasibility and stationarity violations are
/// reported in the returned KTReport.
KTReport kt_verify(const PlayerProblem& p, const Allocation& x);

/// The four path-vector cases of a single-destination problem:
///   (0,0) infeasible; (1,0) payoff -storage_cost; (0,1) payoff
///   benefit - delivery_cost, the maximum; (1,1) strictly dominated with
///   unattained supremum benefit - delivery_cost.
/// Throws ValidationError unless the problem has exactly one destination.
std::array<VCaseRow, 4> enumerate_v_cases(const PlayerProblem& p);

/// Identifier of the sampling algorithm, recorded in sample metadata.
inline constexpr const char* kSamplerAlgorithm = "mt19937_64-invcdf-exp-v1";

/// Uniform draw from the simplex over the argmax destinations: one
/// unit-exponential per argmax destination via inverse-CDF on mt19937_64
/// output, normalized exactly in rational arithmetic. Zero storage; the
/// shares sum to one exactly; identical seeds give identical allocations.
Allocation sample_best_response(const PlayerProblem& p, std::uint64_t seed);

/// True iff every problem's net benefits are equal across its destinations
/// and identical across players (positivity holds by the problem
/// invariants), so all players share one argmax structure covering every
/// link. Requires one problem per network node whose destinations are
/// exactly the other nodes; otherwise throws ValidationError.
bool is_randomly_complete(const Network& net, const std::vector<PlayerProblem>& problems);

}  // namespace cubenet
