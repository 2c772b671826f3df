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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubenet/congestion.hpp"
#include "cubenet/equilibrium.hpp"
#include "cubenet/network.hpp"

// File formats. Every textual export is byte-stable: orderings are
// canonical (lexicographic), rationals print as canonical "p/q", and every
// schema carries a version marker.

namespace cubenet {

inline constexpr int kSchemaVersion = 1;

/// Versioned network document: integer node triples, links as endpoint
/// indices plus kind string, cube min corners.
std::string network_to_json(const Network& net);

/// Strict inverse of network_to_json. Throws ValidationError on malformed
/// or inconsistent input, naming the offending field.
Network network_from_json(const std::string& text);

/// Graphviz graph; nodes labeled "l,m,n", edges carry a kind attribute.
std::string network_to_dot(const Network& net);

/// Wavefront OBJ: one vertex per node in lexicographic order, links as
/// line elements.
std::string network_to_obj(const Network& net);

/// Plain link table: endpoints and kind.
std::string links_to_csv(const Network& net);

/// One row per event: kind, both links, exact locus, node tag, externality
/// flag, whole-unit-link flag.
std::string events_to_csv(const Network& net, const std::vector<CongestionEvent>& events);

/// Point/Full loci with the participating links' endpoints.
std::string congestion_map_to_json(const Network& net, const CongestionMap& map);

/// Aggregate metrics, redundant loci, and the shared-node congestion status
/// for two-cube networks.
std::string congestion_summary_to_json(const Network& net,
                                       const std::vector<CongestionEvent>& events);

/// Parses {"problems":[{player, destinations, benefits, delivery_costs,
/// storage_cost}, ...]}; rationals given as "p/q" or integer strings.
/// Validates every problem invariant, naming the violated field.
std::vector<PlayerProblem> problems_from_json(const std::string& text);

std::string problems_to_json(const std::vector<PlayerProblem>& problems);

/// Best response, multiplier audit of its representative, and one seeded
/// sample per problem; includes the randomly-complete verdict when a
/// network is supplied.
std::string equilibrium_report_to_json(const std::vector<PlayerProblem>& problems,
                                       std::uint64_t seed,
                                       std::optional<bool> randomly_complete);

/// Human-readable multiplier tables, one block per problem.
std::string equilibrium_kt_tables(const std::vector<PlayerProblem>& problems);

}  // namespace cubenet
