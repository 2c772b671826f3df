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

#include "cubenet/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "cubenet/errors.hpp"

namespace cubenet {
namespace {

using nlohmann::json;

json node_to_json(const GridNode& node) { return json::array({node.l, node.m, node.n}); }

GridNode node_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() ||
      !j[1].is_number_integer() || !j[2].is_number_integer()) {
    throw ValidationError(field + " must be an integer triple");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

json point_to_json(const RationalPoint3& p) {
  return json::array({p.x.str(), p.y.str(), p.z.str()});
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (!j.is_string()) {
    throw ValidationError(field + " must be a \"p/q\" string or an integer");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ValidationError& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

// RFC 4180 quoting, applied only where needed; none of our payloads carry
// quotes or newlines.
std::string csv_field(const std::string& value) {
  if (value.find(',') == std::string::npos) return value;
  return "\"" + value + "\"";
}

std::string node_tuple(const GridNode& n) { return "(" + n.str() + ")"; }

std::string link_endpoints(const Link& link) {
  return node_tuple(link.a) + "-" + node_tuple(link.b);
}

std::string point_tuple(const RationalPoint3& p) {
  return "(" + p.x.str() + "," + p.y.str() + "," + p.z.str() + ")";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json allocation_to_json(const Allocation& x) {
  json to = json::array();
  for (const Rational& share : x.to) to.push_back(share.str());
  return json{{"self", x.self.str()}, {"to", to}};
}

json kt_report_to_json(const KTReport& report) {
  json rows = json::array();
  for (const KTReport::Row& row : report.rows) {
    rows.push_back(json{{"variable", row.variable},
                        {"amount", row.amount.str()},
                        {"reduced_benefit", row.reduced_benefit.str()},
                        {"on_support", row.on_support},
                        {"residual", report.mu ? row.residual.str() : ""},
                        {"ok", row.ok}});
  }
  return json{{"satisfied", report.satisfied},
              {"feasible", report.feasible},
              {"support_consistent", report.support_consistent},
              {"mu", report.mu ? report.mu->str() : ""},
              {"first_violation", report.first_violation},
              {"rows", rows}};
}

}  // namespace

std::string network_to_json(const Network& net) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["label"] = net.label;

  json nodes = json::array();
  for (const GridNode& node : net.nodes) nodes.push_back(node_to_json(node));
  doc["nodes"] = nodes;

  json links = json::array();
  for (const Link& link : net.links) {
    links.push_back(json{{"a", *net.node_index(link.a)},
                         {"b", *net.node_index(link.b)},
                         {"kind", to_string(link.kind)}});
  }
  doc["links"] = links;

  json cubes = json::array();
  for (const Box3& box : net.cubes) {
    cubes.push_back(json::array(
        {box.min_corner[0], box.min_corner[1], box.min_corner[2]}));
  }
  doc["cubes"] = cubes;

  if (net.shared) {
    json shared_nodes = json::array();
    for (const GridNode& node : net.shared->nodes) shared_nodes.push_back(node_to_json(node));
    doc["shared"] = json{{"mode", to_string(net.shared->mode)}, {"nodes", shared_nodes}};
  }
  return dump(doc);
}

Network network_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("network document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("network document must be an object");
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    throw ValidationError("schema_version must be " + std::to_string(kSchemaVersion));
  }
  for (const char* field : {"label", "nodes", "links", "cubes"}) {
    if (!doc.contains(field)) {
      throw ValidationError(std::string("missing field '") + field + "'");
    }
  }

  Network net;
  net.label = doc["label"].get<std::string>();
  for (const json& j : doc["nodes"]) {
    net.nodes.push_back(node_from_json(j, "nodes[]"));
  }
  if (!std::is_sorted(net.nodes.begin(), net.nodes.end())) {
    throw ValidationError("nodes must be in lexicographic order");
  }

  for (const json& j : doc["links"]) {
    if (!j.contains("a") || !j.contains("b") || !j.contains("kind")) {
      throw ValidationError("links[] entries need fields a, b, kind");
    }
    const std::size_t ia = j["a"].get<std::size_t>();
    const std::size_t ib = j["b"].get<std::size_t>();
    if (ia >= net.nodes.size() || ib >= net.nodes.size() || ia == ib) {
      throw ValidationError("links[] endpoint indices out of range");
    }
    Link link(net.nodes[ia], net.nodes[ib]);
    if (to_string(link.kind) != j["kind"].get<std::string>()) {
      throw ValidationError("links[] kind '" + j["kind"].get<std::string>() +
                            "' does not match the endpoint displacement of " +
                            link_endpoints(link));
    }
    net.links.push_back(std::move(link));
  }
  const std::size_t expected = net.nodes.size() * (net.nodes.size() - 1) / 2;
  if (net.links.size() != expected) {
    throw ValidationError("links must cover all " + std::to_string(expected) +
                          " node pairs, got " + std::to_string(net.links.size()));
  }

  for (const json& j : doc["cubes"]) {
    const GridNode mn = node_from_json(j, "cubes[]");
    net.cubes.push_back(Box3({mn.l, mn.m, mn.n}, {mn.l + 1, mn.m + 1, mn.n + 1}));
  }

  if (doc.contains("shared")) {
    SharedFeature shared;
    const std::string mode = doc["shared"]["mode"].get<std::string>();
    if (mode == "plane") {
      shared.mode = SharingMode::kPlane;
    } else if (mode == "edge") {
      shared.mode = SharingMode::kEdge;
    } else if (mode == "node") {
      shared.mode = SharingMode::kNode;
    } else {
      throw ValidationError("shared.mode must be plane, edge, or node");
    }
    for (const json& j : doc["shared"]["nodes"]) {
      shared.nodes.push_back(node_from_json(j, "shared.nodes[]"));
    }
    net.shared = std::move(shared);
  }
  return net;
}

std::string network_to_dot(const Network& net) {
  std::ostringstream os;
  os << "// schema_version=" << kSchemaVersion << "\n";
  os << "graph \"" << net.label << "\" {\n";
  os << "  node [shape=point];\n";
  for (const GridNode& node : net.nodes) {
    os << "  \"" << node.str() << "\" [label=\"" << node.str() << "\"];\n";
  }
  for (const Link& link : net.links) {
    os << "  \"" << link.a.str() << "\" -- \"" << link.b.str() << "\" [kind=\""
       << to_string(link.kind) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string network_to_obj(const Network& net) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "o " << net.label << "\n";
  for (const GridNode& node : net.nodes) {
    os << "v " << node.l << " " << node.m << " " << node.n << "\n";
  }
  for (const Link& link : net.links) {
    os << "l " << (*net.node_index(link.a) + 1) << " " << (*net.node_index(link.b) + 1)
       << "\n";
  }
  return os.str();
}

std::string links_to_csv(const Network& net) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "a,b,kind\n";
  for (const Link& link : net.links) {
    os << csv_field(node_tuple(link.a)) << "," << csv_field(node_tuple(link.b)) << ","
       << to_string(link.kind) << "\n";
  }
  return os.str();
}

std::string events_to_csv(const Network& net, const std::vector<CongestionEvent>& events) {
  std::ostringstream os;
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "kind,link1,link2,locus,node,external,covers_unit_link\n";
  for (const CongestionEvent& ev : events) {
    const Link& la = net.links[ev.link_a];
    const Link& lb = net.links[ev.link_b];
    std::string locus;
    if (ev.kind == CongestionKind::kLine) {
      locus = point_tuple(ev.locus_segment->a()) + "-" + point_tuple(ev.locus_segment->b());
    } else {
      locus = point_tuple(*ev.locus_point);
    }
    os << to_string(ev.kind) << "," << csv_field(link_endpoints(la)) << ","
       << csv_field(link_endpoints(lb)) << "," << csv_field(locus) << ","
       << csv_field(ev.at_node ? node_tuple(*ev.at_node) : "") << ","
       << (ev.external ? "true" : "false") << ","
       << (ev.kind == CongestionKind::kLine ? (ev.covers_unit_link ? "true" : "false") : "")
       << "\n";
  }
  return os.str();
}

std::string congestion_map_to_json(const Network& net, const CongestionMap& map) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["label"] = net.label;
  json coords = json::array();
  for (const auto& [locus, links] : map.point_multiplicity) {
    json participants = json::array();
    for (std::size_t li : links) {
      participants.push_back(
          json::array({node_to_json(net.links[li].a), node_to_json(net.links[li].b)}));
    }
    coords.push_back(json{{"locus", point_to_json(locus)},
                          {"multiplicity", links.size()},
                          {"links", participants}});
  }
  doc["coordinates"] = coords;
  return dump(doc);
}

std::string congestion_summary_to_json(const Network& net,
                                       const std::vector<CongestionEvent>& events) {
  const ParadoxMetrics metrics = paradox_metrics(net, events);
  const CongestionMap map = congestion_coordinates(events);

  std::map<CongestionKind, std::size_t> counts;
  for (const CongestionEvent& ev : events) ++counts[ev.kind];

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["label"] = net.label;
  doc["links_total"] = metrics.links_total;
  doc["links_congested"] = metrics.links_congested;
  doc["fraction_congested"] = metrics.fraction_congested.str();
  doc["point_coordinate_count"] = metrics.point_coordinate_count;
  json full_nodes = json::array();
  for (const GridNode& node : metrics.full_nodes) full_nodes.push_back(node_to_json(node));
  doc["full_nodes"] = full_nodes;
  doc["full_node_count"] = metrics.full_nodes.size();
  doc["line_event_count"] = metrics.line_event_count;
  doc["external_count"] = metrics.external_count;
  doc["event_counts"] = json{{"point", counts[CongestionKind::kPoint]},
                             {"line", counts[CongestionKind::kLine]},
                             {"full", counts[CongestionKind::kFull]}};

  json redundant = json::array();
  for (const RationalPoint3& p : redundant_points(net, map)) {
    redundant.push_back(point_to_json(p));
  }
  doc["redundant_points"] = redundant;

  if (net.shared && net.shared->mode == SharingMode::kNode) {
    const GridNode shared_node = net.shared->nodes.front();
    doc["shared_node"] = node_to_json(shared_node);
    const bool fully = std::any_of(
        events.begin(), events.end(), [&shared_node](const CongestionEvent& ev) {
          return ev.kind == CongestionKind::kFull && ev.at_node == shared_node;
        });
    doc["shared_node_fully_congested"] = fully;
    if (fully) {
      doc["shared_node_unit_links_line_congested"] =
          unit_links_line_congested(net, shared_node, events);
    }
  }
  return dump(doc);
}

std::vector<PlayerProblem> problems_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("problem document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("problems") || !doc["problems"].is_array() ||
      doc["problems"].empty()) {
    throw ValidationError("problem document needs a non-empty 'problems' array");
  }

  std::vector<PlayerProblem> problems;
  std::size_t index = 0;
  for (const json& j : doc["problems"]) {
    const std::string at = "problems[" + std::to_string(index) + "]";
    PlayerProblem p;
    if (!j.contains("player") || !j["player"].is_number_unsigned()) {
      throw ValidationError(at + ".player must be a nonnegative integer");
    }
    p.player = j["player"].get<std::size_t>();
    if (!j.contains("destinations") || !j["destinations"].is_array()) {
      throw ValidationError(at + ".destinations must be an array");
    }
    for (const json& d : j["destinations"]) {
      if (!d.is_number_unsigned()) {
        throw ValidationError(at + ".destinations[] must be nonnegative integers");
      }
      p.destinations.push_back(d.get<std::size_t>());
    }
    for (const char* field : {"benefits", "delivery_costs"}) {
      if (!j.contains(field) || !j[field].is_array()) {
        throw ValidationError(at + "." + field + " must be an array");
      }
    }
    std::size_t k = 0;
    for (const json& b : j["benefits"]) {
      p.benefits.push_back(rational_from_json(b, at + ".benefits[" + std::to_string(k++) + "]"));
    }
    k = 0;
    for (const json& c : j["delivery_costs"]) {
      p.delivery_costs.push_back(
          rational_from_json(c, at + ".delivery_costs[" + std::to_string(k++) + "]"));
    }
    if (!j.contains("storage_cost")) {
      throw ValidationError(at + ".storage_cost is required");
    }
    p.storage_cost = rational_from_json(j["storage_cost"], at + ".storage_cost");
    try {
      p.validate();
    } catch (const ValidationError& e) {
      throw ValidationError(at + ": " + e.what());
    }
    problems.push_back(std::move(p));
    ++index;
  }
  return problems;
}

std::string problems_to_json(const std::vector<PlayerProblem>& problems) {
  json arr = json::array();
  for (const PlayerProblem& p : problems) {
    json benefits = json::array();
    for (const Rational& b : p.benefits) benefits.push_back(b.str());
    json costs = json::array();
    for (const Rational& c : p.delivery_costs) costs.push_back(c.str());
    arr.push_back(json{{"player", p.player},
                       {"destinations", p.destinations},
                       {"benefits", benefits},
                       {"delivery_costs", costs},
                       {"storage_cost", p.storage_cost.str()}});
  }
  return dump(json{{"schema_version", kSchemaVersion}, {"problems", arr}});
}

std::string equilibrium_report_to_json(const std::vector<PlayerProblem>& problems,
                                       std::uint64_t seed,
                                       std::optional<bool> randomly_complete) {
  json results = json::array();
  for (const PlayerProblem& p : problems) {
    const BestResponse br = best_response(p);
    const KTReport kt = kt_verify(p, br.representative);
    const Allocation sample = sample_best_response(p, seed);

    json lambda = json::array();
    for (const Rational& l : br.lambda) lambda.push_back(l.str());
    results.push_back(json{
        {"player", p.player},
        {"best_response", json{{"argmax", br.argmax_set},
                               {"value", br.value.str()},
                               {"representative", allocation_to_json(br.representative)},
                               {"mu", br.mu.str()},
                               {"lambda", lambda}}},
        {"kt", kt_report_to_json(kt)},
        {"sample", json{{"algorithm", kSamplerAlgorithm},
                        {"seed", seed},
                        {"allocation", allocation_to_json(sample)}}}});
  }
  json doc{{"schema_version", kSchemaVersion}, {"seed", seed}, {"results", results}};
  if (randomly_complete) doc["randomly_complete"] = *randomly_complete;
  return dump(doc);
}

std::string equilibrium_kt_tables(const std::vector<PlayerProblem>& problems) {
  std::ostringstream os;
  for (const PlayerProblem& p : problems) {
    const BestResponse br = best_response(p);
    os << "player " << p.player << " (value " << br.value.str() << ")\n";
    os << kt_verify(p, br.representative).table() << "\n";
  }
  return os.str();
}

}  // namespace cubenet
