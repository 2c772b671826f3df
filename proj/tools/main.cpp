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

// cubenet command line: builds cubic delivery networks, sweeps and
// classifies their congestion, evaluates player best responses, and runs
// the reference-count verification suite.
//
// Exit codes: 0 success, 1 validation/usage error, 2 size error,
// 3 verification failure.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubenet/congestion.hpp"
#include "cubenet/equilibrium.hpp"
#include "cubenet/errors.hpp"
#include "cubenet/network.hpp"
#include "cubenet/serialize.hpp"
#include "cubenet/verify.hpp"

namespace {

using namespace cubenet;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSize = 2;
constexpr int kExitVerification = 3;

struct LatticeSize {
  std::int64_t nx = 1, ny = 1, nz = 1;
};

LatticeSize parse_lattice_size(const std::string& spec) {
  LatticeSize size;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> size.nx >> c1 >> size.ny >> c2 >> size.nz) || c1 != ',' || c2 != ',' ||
      !(is >> std::ws).eof()) {
    throw ValidationError("lattice selector needs the form lattice:nx,ny,nz");
  }
  return size;
}

Network build_from_selector(const std::string& selector, std::size_t node_cap) {
  if (selector == "linear") return build_linear();
  if (selector == "plane") return build_plane();
  if (selector == "cube") return build_cube();
  if (selector == "two-cube:plane") return build_two_cube(SharingMode::kPlane);
  if (selector == "two-cube:edge") return build_two_cube(SharingMode::kEdge);
  if (selector == "two-cube:node") return build_two_cube(SharingMode::kNode);
  if (selector.rfind("lattice:", 0) == 0) {
    const LatticeSize size = parse_lattice_size(selector.substr(8));
    return build_lattice(size.nx, size.ny, size.nz, node_cap);
  }
  throw ValidationError(
      "unknown network selector '" + selector +
      "' (expected linear|plane|cube|two-cube:plane|two-cube:edge|two-cube:node|"
      "lattice:nx,ny,nz)");
}

std::string sanitize(const std::string& label) {
  std::string out = label;
  for (char& c : out) {
    if (c == ':' || c == ',') c = '-';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open '" + path.string() + "' for writing");
  }
  out << content;
}

std::set<std::string> parse_formats(const std::vector<std::string>& formats) {
  std::set<std::string> out(formats.begin(), formats.end());
  if (out.empty()) out.insert("json");
  for (const std::string& f : out) {
    if (f != "json" && f != "csv" && f != "dot" && f != "obj") {
      throw ValidationError("unknown format '" + f + "' (expected json|csv|dot|obj)");
    }
  }
  return out;
}

int cmd_build(const std::string& selector, const std::string& out_dir,
              const std::vector<std::string>& formats, std::size_t node_cap) {
  const Network net = build_from_selector(selector, node_cap);
  const std::set<std::string> wanted = parse_formats(formats);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = sanitize(net.label);

  if (wanted.contains("json")) {
    write_file(dir / (stem + ".network.json"), network_to_json(net));
  }
  if (wanted.contains("dot")) {
    write_file(dir / (stem + ".dot"), network_to_dot(net));
  }
  if (wanted.contains("obj")) {
    write_file(dir / (stem + ".obj"), network_to_obj(net));
  }
  if (wanted.contains("csv")) {
    write_file(dir / (stem + ".links.csv"), links_to_csv(net));
  }
  std::cout << net.label << ": " << net.nodes.size() << " nodes, " << net.links.size()
            << " links, " << net.cubes.size() << " cubes\n";
  return kExitOk;
}

int cmd_congestion(const std::string& selector, const std::string& out_dir,
                   const std::vector<std::string>& formats, std::size_t node_cap) {
  const Network net = build_from_selector(selector, node_cap);
  const std::vector<CongestionEvent> events = pairwise_congestion(net);
  const ParadoxMetrics metrics = paradox_metrics(net, events);
  const CongestionMap map = congestion_coordinates(events);

  const std::set<std::string> wanted = parse_formats(formats);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = sanitize(net.label);

  if (wanted.contains("csv")) {
    write_file(dir / (stem + ".events.csv"), events_to_csv(net, events));
  }
  if (wanted.contains("json")) {
    write_file(dir / (stem + ".congestion.json"), congestion_map_to_json(net, map));
    write_file(dir / (stem + ".summary.json"), congestion_summary_to_json(net, events));
  }

  std::cout << net.label << ": " << events.size() << " congestion events ("
            << metrics.line_event_count << " line, "
            << metrics.point_coordinate_count << " point coordinates, "
            << metrics.full_nodes.size() << " fully congested nodes, "
            << metrics.external_count << " external)\n";
  std::cout << "congested links: " << metrics.links_congested << "/"
            << metrics.links_total << " (" << metrics.fraction_congested.str() << ")\n";
  for (const GridNode& node : metrics.full_nodes) {
    const bool is_shared = net.shared && net.shared->mode == SharingMode::kNode &&
                           node == net.shared->nodes.front();
    std::cout << "full congestion at node (" << node.str() << ")"
              << (is_shared ? " [shared node]" : "") << "\n";
  }
  return kExitOk;
}

int cmd_equilibrium(const std::string& problem_file, const std::string& out_dir,
                    std::uint64_t seed, const std::optional<std::string>& selector,
                    std::size_t node_cap) {
  std::ifstream in(problem_file, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read problem file '" + problem_file + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::vector<PlayerProblem> problems = problems_from_json(buffer.str());

  std::optional<bool> randomly_complete;
  if (selector) {
    const Network net = build_from_selector(*selector, node_cap);
    randomly_complete = is_randomly_complete(net, problems);
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem =
      std::filesystem::path(problem_file).stem().string();
  write_file(dir / (stem + ".result.json"),
             equilibrium_report_to_json(problems, seed, randomly_complete));
  write_file(dir / (stem + ".kt.txt"), equilibrium_kt_tables(problems));

  for (const PlayerProblem& p : problems) {
    const BestResponse br = best_response(p);
    std::cout << "player " << p.player << ": value " << br.value.str() << ", argmax {";
    for (std::size_t i = 0; i < br.argmax_set.size(); ++i) {
      std::cout << (i ? "," : "") << br.argmax_set[i];
    }
    std::cout << "}\n";
  }
  if (randomly_complete) {
    std::cout << "randomly_complete: " << (*randomly_complete ? "true" : "false")
              << "\n";
  }
  return kExitOk;
}

int cmd_paradox(const std::string& selector, const std::string& out_dir,
                std::size_t node_cap) {
  if (selector.rfind("lattice:", 0) != 0) {
    throw ValidationError("the paradox command needs a lattice:nx,ny,nz selector");
  }
  const LatticeSize target = parse_lattice_size(selector.substr(8));
  if (target.nx < 1 || target.ny < 1 || target.nz < 1) {
    throw ValidationError("lattice dimensions must be positive");
  }

  // Size series: staircase from (1,1,1) to the target, bumping the first
  // dimension still below its target in x,y,z order.
  std::vector<LatticeSize> series;
  LatticeSize cur;
  series.push_back(cur);
  while (cur.nx != target.nx || cur.ny != target.ny || cur.nz != target.nz) {
    if (cur.nx < target.nx) {
      ++cur.nx;
    } else if (cur.ny < target.ny) {
      ++cur.ny;
    } else {
      ++cur.nz;
    }
    series.push_back(cur);
  }

  std::ostringstream csv;
  csv << "# schema_version=" << kSchemaVersion << "\n";
  csv << "nx,ny,nz,links_total,links_congested,fraction_congested,"
         "point_coordinate_count,full_node_count,line_event_count,external_count,"
         "center_links,center_congested,center_all_congested\n";
  for (const LatticeSize& size : series) {
    const Network net = build_lattice(size.nx, size.ny, size.nz, node_cap);
    const ParadoxMetrics metrics = paradox_metrics(net);
    csv << size.nx << "," << size.ny << "," << size.nz << "," << metrics.links_total
        << "," << metrics.links_congested << "," << metrics.fraction_congested.str()
        << "," << metrics.point_coordinate_count << "," << metrics.full_nodes.size()
        << "," << metrics.line_event_count << "," << metrics.external_count << ",";
    const bool center_defined = size.nx >= 3 && size.ny >= 3 && size.nz >= 3 &&
                                size.nx % 2 == 1 && size.ny % 2 == 1 && size.nz % 2 == 1;
    if (center_defined) {
      const CenterCoverage coverage =
          center_cube_coverage(size.nx, size.ny, size.nz, node_cap);
      csv << coverage.center_links << "," << coverage.congested << ","
          << (coverage.all_congested ? "true" : "false");
    } else {
      csv << ",,";
    }
    csv << "\n";
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = sanitize("paradox-" + selector);
  write_file(dir / (stem + ".csv"), csv.str());
  std::cout << csv.str();
  return kExitOk;
}

int cmd_verify_paper(const std::optional<std::string>& out_dir) {
  const VerificationReport report = run_verification();
  std::cout << report.render();
  if (out_dir) {
    const std::filesystem::path dir(*out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "verify-report.json", report.to_json());
  }
  return report.all_pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubic delivery networks: construction, congestion, best responses"};
  app.require_subcommand(1);

  std::string network;
  std::string out_dir = ".";
  std::vector<std::string> formats;
  std::uint64_t seed = 0;
  std::size_t node_cap = kDefaultNodeCap;
  std::string problem_file;

  CLI::App* build = app.add_subcommand("build", "construct a network and export it");
  build->add_option("--network", network, "network selector")->required();
  build->add_option("--out", out_dir, "output directory");
  build->add_option("--format", formats, "json|csv|dot|obj (repeatable)");
  build->add_option("--node-cap", node_cap, "lattice node cap");

  CLI::App* congestion =
      app.add_subcommand("congestion", "classify all pairwise congestion events");
  congestion->add_option("--network", network, "network selector")->required();
  congestion->add_option("--out", out_dir, "output directory");
  congestion->add_option("--format", formats, "json|csv (repeatable)");
  congestion->add_option("--node-cap", node_cap, "lattice node cap");

  CLI::App* equilibrium =
      app.add_subcommand("equilibrium", "best responses and multiplier audit");
  equilibrium->add_option("--problem", problem_file, "problem JSON file")->required();
  equilibrium->add_option("--out", out_dir, "output directory");
  equilibrium->add_option("--seed", seed, "sampler seed");
  equilibrium->add_option("--network", network,
                          "network selector for the randomly-complete check");
  equilibrium->add_option("--node-cap", node_cap, "lattice node cap");

  CLI::App* paradox =
      app.add_subcommand("paradox", "congestion metrics over a series of lattice sizes");
  paradox->add_option("--network", network, "lattice:nx,ny,nz selector")->required();
  paradox->add_option("--out", out_dir, "output directory");
  paradox->add_option("--node-cap", node_cap, "lattice node cap");

  CLI::App* verify =
      app.add_subcommand("verify-paper", "run the reference-count verification suite");
  std::optional<std::string> verify_out;
  verify->add_option("--out", verify_out, "directory for verify-report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (build->parsed()) return cmd_build(network, out_dir, formats, node_cap);
    if (congestion->parsed()) return cmd_congestion(network, out_dir, formats, node_cap);
    if (equilibrium->parsed()) {
      std::optional<std::string> selector;
      if (!network.empty()) selector = network;
      return cmd_equilibrium(problem_file, out_dir, seed, selector, node_cap);
    }
    if (paradox->parsed()) return cmd_paradox(network, out_dir, node_cap);
    if (verify->parsed()) return cmd_verify_paper(verify_out);
  } catch (const SizeError& e) {
    std::cerr << "size error: " << e.what() << "\n";
    return kExitSize;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
