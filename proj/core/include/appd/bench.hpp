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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appd/deadline.hpp"
#include "appd/dense_graph.hpp"

namespace appd {

/// An APPD routine under test. It must poll `deadline` between outer-loop
/// iterations and let TimeoutExpired propagate.
using AppdFunction =
    std::function<DistanceMatrix(const DenseGraph&, Problem, const Deadline&)>;

struct NamedAlgorithm {
  std::string name;
  AppdFunction run;
};

using AlgorithmTable = std::vector<NamedAlgorithm>;

/// "algo4" (calculate-and-copy), "floyd" and "mst-path". `workers` > 1
/// enables the parallel fill for algo4.
AlgorithmTable default_algorithms(unsigned workers = 1);

/// Looks up `name`; throws InvalidArgument listing the known names.
const NamedAlgorithm& find_algorithm(const AlgorithmTable& table,
                                     std::string_view name);

/// Produces the benchmark graph for a given size.
using GraphSource = std::function<DenseGraph(std::size_t n)>;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t dimension = 2;
  std::uint64_t seed = 0;
  std::vector<std::string> algorithms{"algo4"};
  Problem problem = Problem::minimax;
  double timeout_seconds = 7200.0;
  unsigned repetitions = 1;

  /// Sizes strictly increasing and >= 2, timeout > 0, repetitions >= 1,
  /// at least one algorithm. Throws InvalidArgument.
  void validate() const;
};

/// Sizes used by the shipped benchmark profile.
std::vector<std::size_t> default_bench_sizes();

enum class RunStatus { ok, timeout };

struct BenchRow {
  std::string algorithm;
  Problem problem = Problem::minimax;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::ok;
  std::optional<double> wall_seconds;  // empty for timeouts
  std::optional<std::uint64_t> checksum;
};

struct ChecksumMismatch {
  std::size_t n = 0;
  std::string first;
  std::string second;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<ChecksumMismatch> mismatches;
};

struct ScalingFit {
  std::string algorithm;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::size_t points = 0;
  double exponent = 0.0;
};

/// Times every (size, algorithm) cell on seeded random points.
///
/// Only the APPD call is timed; building the graph is not. With more than
/// one repetition the fastest run is kept. Each run gets its own deadline of
/// timeout_seconds. Once an algorithm times out, its remaining (larger)
/// sizes are recorded as timeouts without being run.
BenchReport run_benchmark(const BenchConfig& config,
                          const AlgorithmTable& table = default_algorithms());
BenchReport run_benchmark(const BenchConfig& config,
                          const AlgorithmTable& table,
                          const GraphSource& source);

/// Least-squares slope of log(wall_seconds) against log(n) over the
/// algorithm's completed rows. Needs at least three of them.
ScalingFit estimate_scaling_exponent(const BenchReport& report,
                                     std::string_view algorithm);

/// Fits for every algorithm that has at least three completed rows.
std::vector<ScalingFit> summarize(const BenchReport& report);

/// algorithm,problem,n,seed,status,wall_seconds,checksum_hex
void write_report_csv(std::ostream& out, const BenchReport& report);
/// algorithm,fit_min_n,fit_max_n,exponent
void write_summary_csv(std::ostream& out, const std::vector<ScalingFit>& fits);

}  // namespace appd
