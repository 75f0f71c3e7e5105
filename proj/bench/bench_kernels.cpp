/* Copyright 2026 The rieszpol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// OpenMP kernels against their serial references. The serial versions are
// the correctness baseline; each pair is checked for agreement before timing.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "rpl/domain.hpp"
#include "rpl/kernels.hpp"

namespace {

using namespace rpl;

PointSet sphere_points(std::size_t n, std::uint64_t seed) { return sample_uniform(Domain::sphere(2), n, seed).points(); }

void BM_Potential(benchmark::State& state, bool parallel) {
  const PointSet nodes = sphere_points(static_cast<std::size_t>(state.range(0)), 1);
  const PointSet targets = sphere_points(static_cast<std::size_t>(state.range(1)), 2);
  std::vector<double> out(targets.size());
  for (auto _ : state) {
    if (parallel) {
      kernels::potential_at(nodes, targets, 2.5, out);
    } else {
      kernels::serial::potential_at(nodes, targets, 2.5, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_Energy(benchmark::State& state, bool parallel) {
  const PointSet pts = sphere_points(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::energy(pts, 1.0) : kernels::serial::energy(pts, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_EquallySpaced(benchmark::State& state, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::equally_spaced_sum(n, 0.5) : kernels::serial::equally_spaced_sum(n, 0.5));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HexLattice(benchmark::State& state, bool parallel) {
  const auto radius = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? kernels::hex_lattice_sum(3.0, radius) : kernels::serial::hex_lattice_sum(3.0, radius));
  }
}

BENCHMARK_CAPTURE(BM_Potential, serial, false)->Args({256, 4096})->Args({1024, 16384});
BENCHMARK_CAPTURE(BM_Potential, openmp, true)->Args({256, 4096})->Args({1024, 16384});
BENCHMARK_CAPTURE(BM_Energy, serial, false)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(BM_Energy, openmp, true)->Arg(1000)->Arg(4000);
BENCHMARK_CAPTURE(BM_EquallySpaced, serial, false)->Arg(100000)->Arg(1000000);
BENCHMARK_CAPTURE(BM_EquallySpaced, openmp, true)->Arg(100000)->Arg(1000000);
BENCHMARK_CAPTURE(BM_HexLattice, serial, false)->Arg(200)->Arg(800);
BENCHMARK_CAPTURE(BM_HexLattice, openmp, true)->Arg(200)->Arg(800);

// Summation order differs between the two paths, so agreement is relative.
bool kernels_agree() {
  const PointSet nodes = sphere_points(300, 4), targets = sphere_points(500, 5);
  std::vector<double> a(targets.size()), b(targets.size());
  kernels::potential_at(nodes, targets, 2.5, a);
  kernels::serial::potential_at(nodes, targets, 2.5, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12 * std::abs(b[i])) return false;
  }
  const double e1 = kernels::energy(nodes, 1.0).energy, e2 = kernels::serial::energy(nodes, 1.0).energy;
  const double s1 = kernels::equally_spaced_sum(100000, 0.5), s2 = kernels::serial::equally_spaced_sum(100000, 0.5);
  const double h1 = kernels::hex_lattice_sum(3.0, 100), h2 = kernels::serial::hex_lattice_sum(3.0, 100);
  return std::abs(e1 - e2) <= 1e-12 * e2 && std::abs(s1 - s2) <= 1e-12 * s2 && std::abs(h1 - h2) <= 1e-12 * h2;
}

}  // namespace

int main(int argc, char** argv) {
  if (!kernels_agree()) {
    std::fprintf(stderr, "bench_kernels: parallel and serial kernels disagree\n");
    return 1;
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
