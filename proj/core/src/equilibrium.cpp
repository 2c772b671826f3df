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

#include "cubenet/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "cubenet/errors.hpp"

namespace cubenet {
namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_same_arity(const PlayerProblem& p, const Allocation& x) {
  if (x.to.size() != p.destinations.size()) {
    throw ValidationError("allocation has " + std::to_string(x.to.size()) +
                          " destination shares, problem has " +
                          std::to_string(p.destinations.size()));
  }
}

bool allocation_feasible(const Allocation& x) {
  if (x.self < kZero || kOne < x.self) return false;
  Rational sum = x.self;
  for (const Rational& share : x.to) {
    if (share < kZero || kOne < share) return false;
    sum += share;
  }
  return sum == kOne;
}

}  // namespace

void PlayerProblem::validate() const {
  if (destinations.empty()) {
    throw ValidationError("problem for player " + std::to_string(player) +
                          " has no destinations");
  }
  if (benefits.size() != destinations.size() ||
      delivery_costs.size() != destinations.size()) {
    throw ValidationError(
        "benefits/delivery_costs must have one entry per destination");
  }
  if (!(kZero < storage_cost)) {
    throw ValidationError("storage_cost must be positive, got " + storage_cost.str());
  }
  for (std::size_t k = 0; k < destinations.size(); ++k) {
    if (destinations[k] == player) {
      throw ValidationError("destinations[" + std::to_string(k) +
                            "] equals the player's own node");
    }
    if (!(kZero < delivery_costs[k])) {
      throw ValidationError("delivery_costs[" + std::to_string(k) +
                            "] must be positive, got " + delivery_costs[k].str());
    }
    if (!(delivery_costs[k] < benefits[k])) {
      throw ValidationError("benefits[" + std::to_string(k) + "] (" +
                            benefits[k].str() + ") must exceed delivery_costs[" +
                            std::to_string(k) + "] (" + delivery_costs[k].str() + ")");
    }
  }
  std::set<std::size_t> seen(destinations.begin(), destinations.end());
  if (seen.size() != destinations.size()) {
    throw ValidationError("destinations contain duplicates");
  }
}

Rational payoff(const PlayerProblem& p, const Allocation& x) {
  p.validate();
  check_same_arity(p, x);
  if (!allocation_feasible(x)) {
    throw ValidationError("allocation shares must lie in [0,1] and sum to 1 exactly");
  }
  Rational total = -p.storage_cost * x.self;
  for (std::size_t k = 0; k < x.to.size(); ++k) {
    total += p.net_benefit(k) * x.to[k];
  }
  return total;
}

PathVector path_vector_of(const Allocation& x) {
  PathVector v;
  v.self = kZero < x.self ? 1 : 0;
  v.to.reserve(x.to.size());
  for (const Rational& share : x.to) {
    v.to.push_back(kZero < share ? 1 : 0);
  }
  return v;
}

BestResponse best_response(const PlayerProblem& p) {
  p.validate();
  BestResponse br;
  br.value = p.net_benefit(0);
  for (std::size_t k = 1; k < p.destinations.size(); ++k) {
    br.value = std::max(br.value, p.net_benefit(k));
  }
  br.representative.self = kZero;
  br.representative.to.assign(p.destinations.size(), kZero);
  for (std::size_t k = 0; k < p.destinations.size(); ++k) {
    if (p.net_benefit(k) == br.value) br.argmax_set.push_back(p.destinations[k]);
  }
  const Rational share(1, static_cast<long long>(br.argmax_set.size()));
  for (std::size_t k = 0; k < p.destinations.size(); ++k) {
    if (p.net_benefit(k) == br.value) br.representative.to[k] = share;
  }
  br.mu = br.value;
  br.lambda = {kZero, kZero, kZero};
  return br;
}

KTReport kt_verify(const PlayerProblem& p, const Allocation& x) {
  KTReport report;
  try {
    p.validate();
    check_same_arity(p, x);
  } catch (const ValidationError& e) {
    report.first_violation = e.what();
    return report;
  }

  report.feasible = allocation_feasible(x);

  // Reduced benefits: -storage_cost on the storage coordinate, net benefit
  // elsewhere. The multiplier mu must equal the reduced benefit on every
  // support coordinate.
  std::vector<std::pair<std::string, Rational>> support;
  if (kZero < x.self) support.emplace_back("storage", -p.storage_cost);
  for (std::size_t k = 0; k < x.to.size(); ++k) {
    if (kZero < x.to[k]) {
      support.emplace_back("to[" + std::to_string(p.destinations[k]) + "]",
                           p.net_benefit(k));
    }
  }

  report.support_consistent = true;
  std::string inconsistent_pair;
  if (!support.empty()) {
    for (const auto& [name, reduced] : support) {
      if (reduced != support.front().second) {
        report.support_consistent = false;
        inconsistent_pair = support.front().first + " vs " + name;
        break;
      }
    }
    if (report.support_consistent) report.mu = support.front().second;
  }

  auto add_row = [&report](std::string name, const Rational& amount,
                           const Rational& reduced) {
    KTReport::Row row;
    row.variable = std::move(name);
    row.amount = amount;
    row.reduced_benefit = reduced;
    row.on_support = kZero < amount;
    if (report.mu) {
      row.residual = reduced - *report.mu;
      row.ok = row.on_support ? row.residual.is_zero() : !(kZero < row.residual);
    }
    report.rows.push_back(std::move(row));
  };
  add_row("storage", x.self, -p.storage_cost);
  for (std::size_t k = 0; k < x.to.size(); ++k) {
    add_row("to[" + std::to_string(p.destinations[k]) + "]", x.to[k], p.net_benefit(k));
  }

  if (!report.feasible) {
    report.first_violation = "shares must lie in [0,1] and sum to 1 exactly";
    return report;
  }
  if (!report.support_consistent) {
    report.first_violation =
        "reduced benefit not constant on support: " + inconsistent_pair;
    return report;
  }
  // Feasible with sum 1 implies non-empty support, so mu is set here.
  for (const KTReport::Row& row : report.rows) {
    if (!row.ok) {
      report.first_violation =
          row.variable +
          (row.on_support ? ": stationarity residual " : ": positive reduced benefit off support, residual ") +
          row.residual.str();
      return report;
    }
  }
  report.satisfied = true;
  return report;
}

std::string KTReport::table() const {
  std::ostringstream os;
  os << "variable    amount      reduced     on_support  residual    ok\n";
  for (const Row& row : rows) {
    os << row.variable;
    for (std::size_t pad = row.variable.size(); pad < 12; ++pad) os << ' ';
    auto cell = [&os](const std::string& s) {
      os << s;
      for (std::size_t pad = s.size(); pad < 12; ++pad) os << ' ';
    };
    cell(row.amount.str());
    cell(row.reduced_benefit.str());
    cell(row.on_support ? "yes" : "no");
    cell(mu ? row.residual.str() : "-");
    os << (row.ok ? "yes" : "no") << "\n";
  }
  os << "mu: " << (mu ? mu->str() : "-") << "\n";
  os << "verdict: " << (satisfied ? "satisfied" : "violated (" + first_violation + ")")
     << "\n";
  return os.str();
}

std::array<VCaseRow, 4> enumerate_v_cases(const PlayerProblem& p) {
  p.validate();
  if (p.destinations.size() != 1) {
    throw ValidationError("the path-vector table needs exactly one destination, got " +
                          std::to_string(p.destinations.size()));
  }
  const Rational net = p.net_benefit(0);

  std::array<VCaseRow, 4> rows;
  rows[0] = {0, 0, false, std::nullopt, std::nullopt, false,
             "no goods anywhere contradicts the unit-sum constraint"};
  rows[1] = {1, 0, true, -p.storage_cost, std::nullopt, true,
             "all goods stored: negative payoff"};
  rows[2] = {0, 1, true, net, std::nullopt, false,
             "all goods delivered: the maximal payoff"};
  rows[3] = {1, 1, true, std::nullopt, net, true,
             "split with positive storage: supremum not attained, the "
             "stationarity pair (-mu = 0, net - mu = 0) is inconsistent for "
             "positive net benefit"};
  return rows;
}

Allocation sample_best_response(const PlayerProblem& p, std::uint64_t seed) {
  const BestResponse br = best_response(p);
  std::vector<std::size_t> argmax_positions;
  for (std::size_t k = 0; k < p.destinations.size(); ++k) {
    if (p.net_benefit(k) == br.value) argmax_positions.push_back(k);
  }

  Allocation x;
  x.self = kZero;
  x.to.assign(p.destinations.size(), kZero);
  if (argmax_positions.size() == 1) {
    x.to[argmax_positions.front()] = kOne;
    return x;
  }

  std::mt19937_64 gen(seed);
  std::vector<Rational> weights;
  weights.reserve(argmax_positions.size());
  Rational total = kZero;
  for (std::size_t k = 0; k < argmax_positions.size(); ++k) {
    // u is a dyadic rational in (0,1); -ln(u) is a unit exponential.
    const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    const Rational w = Rational::from_double(-std::log(u));
    weights.push_back(w);
    total += w;
  }
  for (std::size_t k = 0; k < argmax_positions.size(); ++k) {
    x.to[argmax_positions[k]] = weights[k] / total;
  }
  return x;
}

bool is_randomly_complete(const Network& net, const std::vector<PlayerProblem>& problems) {
  if (problems.size() != net.nodes.size()) {
    throw ValidationError("expected one problem per node: " +
                          std::to_string(net.nodes.size()) + " nodes, " +
                          std::to_string(problems.size()) + " problems");
  }
  std::set<std::size_t> players;
  for (const PlayerProblem& p : problems) {
    p.validate();
    if (p.player >= net.nodes.size()) {
      throw ValidationError("player index " + std::to_string(p.player) +
                            " outside the node range");
    }
    players.insert(p.player);
    std::set<std::size_t> expected;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
      if (i != p.player) expected.insert(i);
    }
    if (std::set<std::size_t>(p.destinations.begin(), p.destinations.end()) != expected) {
      throw ValidationError("player " + std::to_string(p.player) +
                            " must list every other node as a destination");
    }
  }
  if (players.size() != problems.size()) {
    throw ValidationError("duplicate player indices in the problem list");
  }

  std::optional<Rational> common;
  for (const PlayerProblem& p : problems) {
    for (std::size_t k = 0; k < p.destinations.size(); ++k) {
      const Rational net_benefit = p.net_benefit(k);
      if (!common) {
        common = net_benefit;
      } else if (*common != net_benefit) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cubenet
