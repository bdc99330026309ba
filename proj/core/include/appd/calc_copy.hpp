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
#include <utility>
#include <vector>

#include "appd/deadline.hpp"
#include "appd/dense_graph.hpp"
#include "appd/spanning_tree.hpp"

namespace appd {

/// A spanning tree from which edges are deleted one at a time.
///
/// Deleting an edge splits one component in two; the two sides are
/// recovered with component() starting from the edge's endpoints.
class Forest {
 public:
  explicit Forest(const SpanningTree& tree);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t removed() const noexcept { return removed_; }

  /// Deletes tree edge `edge` from both endpoint lists. O(degree).
  void remove(std::size_t edge);

  /// Appends every vertex connected to `start` in the current forest to
  /// `out`, in depth-first order. Uses an explicit stack; no recursion.
  void component(std::size_t start, std::vector<std::size_t>& out);

 private:
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t removed_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack_;
};

/// Order in which tree edges are cut: heaviest first for minimax, lightest
/// first for widest. Equal weights keep ascending insertion order.
std::vector<std::size_t> removal_order(const SpanningTree& tree,
                                       Problem problem);

struct CalcCopyOptions {
  /// Worker threads for the fill. 1 runs the sequential algorithm; more
  /// workers split the removal order into contiguous chunks and produce a
  /// bit-identical matrix.
  unsigned workers = 1;
  const Deadline* deadline = nullptr;
};

struct CalcCopyStats {
  /// Unordered vertex pairs assigned a value. Equals n(n-1)/2.
  std::uint64_t pair_writes = 0;
  /// Vertices visited while enumerating the two sides of every cut.
  std::uint64_t traversal_cost = 0;
};

struct CalcCopyResult {
  DistanceMatrix matrix;
  CalcCopyStats stats;
};

/// All-pairs minimax or widest path distances in O(n^2).
///
/// Builds a minimum (minimax) or maximum (widest) spanning tree, then
/// removes its edges in removal_order(). Removing edge (u, v, w) separates
/// the component of u from the component of v, and every pair split by that
/// cut has path distance w. Each unordered pair is assigned exactly once.
///
/// The cuts run on a relabeled tree in which both sides of every cut are
/// contiguous id ranges, so each cut writes a compact block of the matrix;
/// one in-place permutation pass restores the caller's vertex ids.
DistanceMatrix appd_calc_copy(const DenseGraph& graph, Problem problem,
                              const CalcCopyOptions& options = {});

/// Same matrix plus write and traversal counters.
CalcCopyResult appd_calc_copy_instrumented(const DenseGraph& graph,
                                           Problem problem,
                                           const CalcCopyOptions& options = {});

/// Fill step only, over a caller-supplied tree of the matching sense.
CalcCopyResult calc_copy_from_tree(const SpanningTree& tree, Problem problem,
                                   const CalcCopyOptions& options = {});

}  // namespace appd
