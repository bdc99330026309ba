// Copyright 2026 The appd Authors
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


// Microbenchmarks for the APPD algorithms on random Euclidean point sets.

#include <benchmark/benchmark.h>

#include <cstddef>

#include "appd/appd.hpp"

namespace {

appd::DenseGraph make_graph(std::size_t n) {
  return appd::complete_graph_from_points(appd::generate_random_points(n, 2, 0));
}

void BM_CalcCopy(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(appd::appd_calc_copy(graph, appd::Problem::minimax));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CalcCopy)->RangeMultiplier(2)->Range(128, 4096)->Complexity(benchmark::oNSquared);

void BM_PrimTree(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        appd::prim_spanning_tree(graph, appd::TreeSense::minimum));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrimTree)->RangeMultiplier(2)->Range(128, 4096)->Complexity(benchmark::oNSquared);

void BM_MstPath(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(appd::appd_mst_path(graph, appd::Problem::minimax));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MstPath)->RangeMultiplier(2)->Range(128, 2048);

void BM_Floyd(benchmark::State& state) {
  const auto graph = make_graph(static_cast<std::size_t>(state.range(0)));
  const auto order = state.range(1) == 0 ? appd::InnerLoopOrder::row_major
                                         : appd::InnerLoopOrder::column_major;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        appd::appd_floyd(graph, appd::Problem::minimax, {.inner_order = order}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Floyd)->ArgsProduct({{128, 256, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
