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
#include <iosfwd>
#include <string>
#include <vector>

#include "appd/bench.hpp"
#include "appd/dense_graph.hpp"

namespace appd::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kMismatch = 2,
  kUsage = 3,
};

struct VerifyConfig {
  std::size_t n_max = 8;
  std::size_t seeds = 50;
  Problem problem = Problem::minimax;
};

/// Seed s runs on generate_random_points(2 + s % (n_max - 1), 2, s).
/// Cross-checks algo4, floyd and mst-path from `table` (plus brute force for
/// n <= 8) and the structural invariants of the algo4 output. The first
/// failure is described on `diag`, together with the offending graph.
/// Returns kOk or kMismatch.
int run_verify(const VerifyConfig& config, const AlgorithmTable& table,
               std::ostream& out, std::ostream& diag);

/// Entry point behind the `appd` executable. `table` supplies the
/// algorithms for compute, bench and verify; tests swap in faulty ones.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const AlgorithmTable& table);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace appd::cli
