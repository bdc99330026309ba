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
#include <vector>

#include "appd/deadline.hpp"
#include "appd/dense_graph.hpp"

namespace appd {

/// Order of the two inner loops of the Floyd-Warshall relaxation. The
/// intermediate vertex is always the outermost loop.
///  - row_major: i then j, with intermediates applied to each row in
///    blocks of eight while the row is cache resident. Same updates, same
///    order per cell as the plain loop.
///  - column_major: plain k, j, i loop.
enum class InnerLoopOrder { row_major, column_major };

struct FloydOptions {
  InnerLoopOrder inner_order = InnerLoopOrder::row_major;
  const Deadline* deadline = nullptr;  // polled once per intermediate vertex
};

/// O(n^3) Floyd-Warshall variant. Minimax relaxes
///   d[i][j] = min(d[i][j], max(d[i][k], d[k][j]))
/// and widest swaps min and max.
DistanceMatrix appd_floyd(const DenseGraph& graph, Problem problem,
                          const FloydOptions& options = {});

/// Builds the matching spanning tree and reads each pair's bottleneck off
/// the unique tree path, walking both endpoints up to their lowest common
/// ancestor. O(n^2 * depth).
DistanceMatrix appd_mst_path(const DenseGraph& graph, Problem problem,
                             const Deadline* deadline = nullptr);

/// Every simple path between two vertices together with each path's
/// extreme edge weight (largest for minimax, smallest for widest).
struct PathEnumeration {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::vector<std::size_t>> paths;  // vertex sequences
  std::vector<double> extremes;                 // one per path

  /// min of extremes (minimax) or max of extremes (widest).
  double distance(Problem problem) const;
};

inline constexpr std::size_t kBruteForceMaxVertices = 8;

/// Throws InvalidArgument when the graph exceeds kBruteForceMaxVertices.
PathEnumeration enumerate_paths(const DenseGraph& graph, std::size_t source,
                                std::size_t target, Problem problem);

/// Path distances straight from the definition, by enumerating every
/// simple path of every pair. Refuses graphs above kBruteForceMaxVertices.
DistanceMatrix brute_force_appd(const DenseGraph& graph, Problem problem);

}  // namespace appd
