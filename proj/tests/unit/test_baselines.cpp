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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "appd/baselines.hpp"
#include "appd/calc_copy.hpp"
#include "appd/checksum.hpp"
#include "appd/random_points.hpp"
#include "oracles.hpp"

using namespace appd;

namespace {

const DenseGraph& triangle() {
  static const DenseGraph g(3, {0, 1, 3, 1, 0, 2, 3, 2, 0});
  return g;
}

// Simple paths between two fixed vertices of K_n: choose an ordered
// sequence of 0..n-2 distinct intermediates.
std::size_t simple_path_count(std::size_t n) {
  std::size_t total = 0;
  std::size_t arrangements = 1;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    total += arrangements;
    arrangements *= (n - 2 - k);
  }
  return total;
}

}  // namespace

TEST_CASE("floyd on a single edge") {
  const DenseGraph g(2, {0, 7, 7, 0});
  for (Problem p : {Problem::minimax, Problem::widest}) {
    CHECK(appd_floyd(g, p).at(0, 1) == 7.0);
  }
}

TEST_CASE("floyd on the triangle agrees with path enumeration") {
  const auto d = appd_floyd(triangle(), Problem::minimax);
  CHECK(d.at(0, 2) == 2.0);
  const auto paths = enumerate_paths(triangle(), 0, 2, Problem::minimax);
  CHECK(paths.paths.size() == 2);
  CHECK(paths.distance(Problem::minimax) == 2.0);
  CHECK(d == brute_force_appd(triangle(), Problem::minimax));
  CHECK(appd_floyd(triangle(), Problem::widest) ==
        brute_force_appd(triangle(), Problem::widest));
}

TEST_CASE("floyd equals brute force at n = 8, seed 3") {
  const auto g = complete_graph_from_points(generate_random_points(8, 2, 3));
  for (Problem p : {Problem::minimax, Problem::widest}) {
    CHECK(appd_floyd(g, p) == brute_force_appd(g, p));
  }
}

TEST_CASE("floyd keeps a zero diagonal with negative weights and in widest sense") {
  const auto g = testing::random_graph(12, 99);
  for (Problem p : {Problem::minimax, Problem::widest}) {
    const auto d = appd_floyd(g, p);
    for (std::size_t i = 0; i < 12; ++i) CHECK(d.at(i, i) == 0.0);
  }
  const auto small = testing::random_graph(8, 99);
  for (Problem p : {Problem::minimax, Problem::widest}) {
    CHECK(appd_floyd(small, p) == brute_force_appd(small, p));
  }
}

TEST_CASE("swapping the inner loops of floyd does not change the result") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const auto g = seed % 2 == 0 ? testing::random_graph(n, seed)
                                 : testing::quantized_point_graph(n, seed);
    for (Problem p : {Problem::minimax, Problem::widest}) {
      const auto a = appd_floyd(g, p, {.inner_order = InnerLoopOrder::row_major});
      const auto b = appd_floyd(g, p, {.inner_order = InnerLoopOrder::column_major});
      CHECK(checksum(a) == checksum(b));
    }
  }
}

TEST_CASE("mst-path baseline") {
  SUBCASE("single edge") {
    CHECK(appd_mst_path(DenseGraph(2, {0, 7, 7, 0}), Problem::minimax).at(0, 1) == 7.0);
  }
  SUBCASE("triangle equals floyd") {
    for (Problem p : {Problem::minimax, Problem::widest}) {
      CHECK(appd_mst_path(triangle(), p) == appd_floyd(triangle(), p));
    }
  }
  SUBCASE("32 points, seed 5, equal calc-and-copy") {
    const auto g = complete_graph_from_points(generate_random_points(32, 2, 5));
    for (Problem p : {Problem::minimax, Problem::widest}) {
      CHECK(checksum(appd_mst_path(g, p)) == checksum(appd_calc_copy(g, p)));
    }
  }
  SUBCASE("single vertex") {
    CHECK(appd_mst_path(DenseGraph(1, {0.0}), Problem::widest).at(0, 0) == 0.0);
  }
}

TEST_CASE("brute force enumerates each simple path once") {
  SUBCASE("n = 2 has one path") {
    const auto e = enumerate_paths(DenseGraph(2, {0, 4, 4, 0}), 0, 1, Problem::minimax);
    REQUIRE(e.paths.size() == 1);
    CHECK(e.paths[0] == std::vector<std::size_t>{0, 1});
    CHECK(e.extremes == std::vector<double>{4.0});
  }
  SUBCASE("counts on complete graphs") {
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto g = testing::random_graph(n, n);
      const auto e = enumerate_paths(g, 0, n - 1, Problem::minimax);
      CHECK(e.paths.size() == simple_path_count(n));
      CHECK(e.extremes.size() == e.paths.size());
      std::set<std::vector<std::size_t>> unique(e.paths.begin(), e.paths.end());
      CHECK(unique.size() == e.paths.size());
      for (const auto& path : e.paths) {
        CHECK(path.front() == 0);
        CHECK(path.back() == n - 1);
        std::set<std::size_t> vertices(path.begin(), path.end());
        CHECK(vertices.size() == path.size());
      }
    }
    CHECK(simple_path_count(3) == 2);
    CHECK(simple_path_count(8) == 1957);
  }
  SUBCASE("extremes are the per-path max (minimax) or min (widest)") {
    const auto e = enumerate_paths(triangle(), 0, 2, Problem::widest);
    // paths 0-2 (3) and 0-1-2 (min(1,2) = 1)
    CHECK(e.distance(Problem::widest) == 3.0);
    std::vector<double> sorted = e.extremes;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<double>{1.0, 3.0});
  }
}

TEST_CASE("brute force agrees with floyd on 50 seeds at n = 8") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = complete_graph_from_points(generate_random_points(8, 2, seed));
    for (Problem p : {Problem::minimax, Problem::widest}) {
      REQUIRE(brute_force_appd(g, p) == appd_floyd(g, p));
    }
  }
}

TEST_CASE("brute force refuses more than eight vertices") {
  const auto g = complete_graph_from_points(generate_random_points(9, 2, 1));
  try {
    brute_force_appd(g, Problem::minimax);
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("8") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_paths(g, 0, 1, Problem::minimax), InvalidArgument);
}

TEST_CASE("baselines honour an expired deadline") {
  const auto g = complete_graph_from_points(generate_random_points(30, 2, 1));
  const Deadline past(Deadline::Clock::now() - std::chrono::seconds(1));
  CHECK_THROWS_AS(appd_floyd(g, Problem::minimax, {.deadline = &past}), TimeoutExpired);
  CHECK_THROWS_AS(appd_mst_path(g, Problem::minimax, &past), TimeoutExpired);
}
