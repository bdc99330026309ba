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
#include <iosfwd>
#include <vector>

#include "appd/deadline.hpp"
#include "appd/dense_graph.hpp"

namespace appd {

enum class TreeSense { minimum, maximum };

struct TreeEdge {
  std::size_t u;
  std::size_t v;
  double weight;
  std::size_t seq;  // position in Prim's insertion order, 0..n-2

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Reference from a vertex to one of its tree edges.
struct Incidence {
  std::size_t neighbor;
  std::size_t edge;  // index into SpanningTree::edges()
};

class SpanningTree {
 public:
  SpanningTree(std::size_t n, TreeSense sense, std::vector<TreeEdge> edges);

  std::size_t size() const noexcept { return n_; }
  TreeSense sense() const noexcept { return sense_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<Incidence>>& adjacency() const noexcept {
    return adjacency_;
  }
  double total_weight() const noexcept;

 private:
  std::size_t n_;
  TreeSense sense_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Array-scan Prim in O(n^2) time, starting at vertex 0.
///
/// Among candidates with equal key the smallest vertex id is attached first,
/// and a vertex keeps its earlier parent when a later key ties. The maximum
/// tree is the minimum tree of the negated weights; stored edge weights are
/// always the original ones.
SpanningTree prim_spanning_tree(const DenseGraph& graph, TreeSense sense,
                                const Deadline* deadline = nullptr);

/// Debug dump: one "u,v,weight" line per edge in insertion order.
void write_tree_csv(std::ostream& out, const SpanningTree& tree);

}  // namespace appd
