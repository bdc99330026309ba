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

#include <cmath>
#include <sstream>
#include <thread>

#include "appd/baselines.hpp"
#include "appd/bench.hpp"
#include "appd/calc_copy.hpp"
#include "appd/checksum.hpp"
#include "appd/random_points.hpp"

using namespace appd;
using namespace std::chrono_literals;

namespace {

BenchRow synthetic_row(const std::string& algo, std::size_t n, double seconds) {
  BenchRow row;
  row.algorithm = algo;
  row.n = n;
  row.status = RunStatus::ok;
  row.wall_seconds = seconds;
  row.checksum = 0;
  return row;
}

}  // namespace

TEST_CASE("config validation") {
  BenchConfig c;
  c.sizes = {10, 20};
  CHECK_NOTHROW(c.validate());

  auto bad = c;
  bad.sizes = {20, 10};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad.sizes = {10, 10};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad.sizes = {1, 10};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad.sizes = {};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = c;
  bad.timeout_seconds = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = c;
  bad.repetitions = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = c;
  bad.algorithms = {"dijkstra"};
  CHECK_THROWS_AS(run_benchmark(bad), InvalidArgument);

  CHECK(BenchConfig{}.timeout_seconds == 7200.0);
  CHECK(BenchConfig{}.repetitions == 1);
  CHECK(default_bench_sizes() == std::vector<std::size_t>{500, 1000, 2000, 4000, 8000, 10000});
}

TEST_CASE("two algorithms on one size agree") {
  BenchConfig c;
  c.sizes = {64};
  c.algorithms = {"algo4", "floyd"};
  const auto report = run_benchmark(c);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].status == RunStatus::ok);
  CHECK(report.rows[1].status == RunStatus::ok);
  CHECK(report.rows[0].checksum == report.rows[1].checksum);
  CHECK(report.mismatches.empty());
}

TEST_CASE("all three algorithms agree in widest sense") {
  BenchConfig c;
  c.sizes = {10, 50, 120};
  c.algorithms = {"algo4", "floyd", "mst-path"};
  c.problem = Problem::widest;
  c.seed = 4;
  const auto report = run_benchmark(c);
  CHECK(report.rows.size() == 9);
  CHECK(report.mismatches.empty());
  const auto expected = checksum(appd_calc_copy(
      complete_graph_from_points(generate_random_points(120, 2, 4)), Problem::widest));
  CHECK(report.rows.back().checksum == expected);
}

TEST_CASE("tiny budget produces timeout rows") {
  BenchConfig c;
  c.sizes = {2000, 2100};
  c.algorithms = {"floyd"};
  c.timeout_seconds = 1e-6;
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_benchmark(c);
  REQUIRE(report.rows.size() == 2);
  for (const auto& row : report.rows) {
    CHECK(row.status == RunStatus::timeout);
    CHECK_FALSE(row.wall_seconds.has_value());
    CHECK_FALSE(row.checksum.has_value());
  }
  CHECK(std::chrono::steady_clock::now() - start < 5s);
}

TEST_CASE("graph construction is excluded from the timing") {
  AlgorithmTable table{{"sleepy", [](const DenseGraph& g, Problem p, const Deadline&) {
                          std::this_thread::sleep_for(50ms);
                          return DistanceMatrix(g.size(), p);
                        }}};
  BenchConfig c;
  c.sizes = {2};
  c.algorithms = {"sleepy"};
  const auto report = run_benchmark(c, table, [](std::size_t n) {
    std::this_thread::sleep_for(300ms);
    return DenseGraph(n, std::vector<double>(n * n, 0.0));
  });
  REQUIRE(report.rows.size() == 1);
  CHECK(*report.rows[0].wall_seconds >= 0.05);
  CHECK(*report.rows[0].wall_seconds < 0.25);
}

TEST_CASE("repetitions keep the fastest run") {
  int calls = 0;
  AlgorithmTable table{{"slowing", [&calls](const DenseGraph& g, Problem p, const Deadline&) {
                          std::this_thread::sleep_for(std::chrono::milliseconds(20 * ++calls));
                          return DistanceMatrix(g.size(), p);
                        }}};
  BenchConfig c;
  c.sizes = {3};
  c.algorithms = {"slowing"};
  c.repetitions = 3;
  const auto report = run_benchmark(c, table);
  CHECK(calls == 3);
  CHECK(*report.rows[0].wall_seconds < 0.039);
}

TEST_CASE("checksum disagreement is reported") {
  auto table = default_algorithms();
  table.push_back({"broken", [](const DenseGraph& g, Problem p, const Deadline& d) {
                     auto m = appd_calc_copy(g, p, {.deadline = &d});
                     m.at(0, 1) += 1.0;
                     return m;
                   }});
  BenchConfig c;
  c.sizes = {16};
  c.algorithms = {"algo4", "broken"};
  const auto report = run_benchmark(c, table);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].n == 16);
  CHECK(report.mismatches[0].second == "broken");
}

TEST_CASE("scaling exponent of exact power laws") {
  for (double power : {2.0, 3.0}) {
    BenchReport r;
    for (std::size_t n : {500u, 1000u, 2000u, 4000u}) {
      r.rows.push_back(synthetic_row("x", n, std::pow(static_cast<double>(n), power)));
    }
    const auto fit = estimate_scaling_exponent(r, "x");
    CHECK(std::abs(fit.exponent - power) <= 1e-9);
    CHECK(fit.min_n == 500);
    CHECK(fit.max_n == 4000);
    CHECK(fit.points == 4);
  }
}

TEST_CASE("scaling fit needs three completed rows") {
  BenchReport r;
  r.rows.push_back(synthetic_row("x", 10, 1.0));
  r.rows.push_back(synthetic_row("x", 20, 4.0));
  BenchRow timeout;
  timeout.algorithm = "x";
  timeout.n = 40;
  timeout.status = RunStatus::timeout;
  r.rows.push_back(timeout);
  CHECK_THROWS_AS(estimate_scaling_exponent(r, "x"), InvalidArgument);
  CHECK(summarize(r).empty());
  r.rows.push_back(synthetic_row("x", 80, 64.0));
  CHECK(std::abs(estimate_scaling_exponent(r, "x").exponent - 2.0) < 1e-9);
  CHECK(summarize(r).size() == 1);
}

TEST_CASE("report and summary CSV layout") {
  BenchReport r;
  r.rows.push_back(synthetic_row("algo4", 500, 0.25));
  r.rows.back().checksum = 0xabcULL;
  BenchRow timeout;
  timeout.algorithm = "floyd";
  timeout.problem = Problem::widest;
  timeout.n = 4000;
  timeout.seed = 9;
  timeout.status = RunStatus::timeout;
  r.rows.push_back(timeout);
  std::ostringstream out;
  write_report_csv(out, r);
  CHECK(out.str() ==
        "algorithm,problem,n,seed,status,wall_seconds,checksum_hex\n"
        "algo4,minimax,500,0,ok,0.25,0000000000000abc\n"
        "floyd,widest,4000,9,timeout,,\n");

  std::ostringstream summary;
  write_summary_csv(summary, {{"algo4", 500, 4000, 4, 2.125}});
  CHECK(summary.str() == "algorithm,fit_min_n,fit_max_n,exponent\nalgo4,500,4000,2.125\n");
}

TEST_CASE("benchmark-scale graph: calc-and-copy equals floyd") {
  const auto g = complete_graph_from_points(generate_random_points(1000, 2, 7));
  CHECK(checksum(appd_calc_copy(g, Problem::minimax)) ==
        checksum(appd_floyd(g, Problem::minimax)));
}

TEST_CASE("calc-and-copy wall time grows with n") {
  BenchConfig c;
  c.sizes = {500, 1000, 2000, 4000};
  c.repetitions = 3;
  const auto report = run_benchmark(c);
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    CHECK(*report.rows[k].wall_seconds >= *report.rows[k - 1].wall_seconds);
  }
}
