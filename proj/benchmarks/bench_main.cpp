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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cubenet/congestion.hpp"
#include "cubenet/equilibrium.hpp"
#include "cubenet/geometry.hpp"
#include "cubenet/network.hpp"

namespace {

using namespace cubenet;

std::vector<Segment> random_segments(std::size_t count) {
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<int> coord(0, 3);
  std::vector<Segment> segs;
  while (segs.size() < count) {
    const RationalPoint3 a{Rational(coord(gen)), Rational(coord(gen)), Rational(coord(gen))};
    const RationalPoint3 b{Rational(coord(gen)), Rational(coord(gen)), Rational(coord(gen))};
    if (a == b) continue;
    segs.emplace_back(a, b);
  }
  return segs;
}

void BM_IntersectSegments(benchmark::State& state) {
  const auto segs = random_segments(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s1 = segs[i % segs.size()];
    const auto& s2 = segs[(i * 7 + 3) % segs.size()];
    benchmark::DoNotOptimize(intersect_segments(s1, s2));
    ++i;
  }
}
BENCHMARK(BM_IntersectSegments);

void BM_PairwiseSweep_Cube(benchmark::State& state) {
  const Network net = build_cube();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_congestion(net));
  }
}
BENCHMARK(BM_PairwiseSweep_Cube);

void BM_PairwiseSweep_TwoCube(benchmark::State& state) {
  const Network net = build_two_cube(SharingMode::kNode);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_congestion(net));
  }
}
BENCHMARK(BM_PairwiseSweep_TwoCube);

void BM_PairwiseSweep_Lattice222(benchmark::State& state) {
  const Network net = build_lattice(2, 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_congestion(net));
  }
}
BENCHMARK(BM_PairwiseSweep_Lattice222)->Unit(benchmark::kMillisecond);

// The heaviest default workload: 2016 links, ~2.0M pairs.
void BM_PairwiseSweep_Lattice333(benchmark::State& state) {
  const Network net = build_lattice(3, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_congestion(net));
  }
}
BENCHMARK(BM_PairwiseSweep_Lattice333)->Unit(benchmark::kSecond)->Iterations(1);

void BM_BestResponse(benchmark::State& state) {
  PlayerProblem p;
  p.player = 0;
  for (std::size_t j = 1; j < 8; ++j) {
    p.destinations.push_back(j);
    p.delivery_costs.push_back(Rational(1, 3));
    p.benefits.push_back(Rational(static_cast<long long>(j) + 1, 3));
  }
  p.storage_cost = Rational(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_response(p));
  }
}
BENCHMARK(BM_BestResponse);

void BM_SampleBestResponse(benchmark::State& state) {
  PlayerProblem p;
  p.player = 0;
  for (std::size_t j = 1; j < 8; ++j) {
    p.destinations.push_back(j);
    p.delivery_costs.push_back(Rational(1));
    p.benefits.push_back(Rational(3));
  }
  p.storage_cost = Rational(1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_best_response(p, seed++));
  }
}
BENCHMARK(BM_SampleBestResponse);

}  // namespace

BENCHMARK_MAIN();
