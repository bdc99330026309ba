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

#include "appd/spanning_tree.hpp"

#include <limits>
#include <ostream>

#include "appd/csv_io.hpp"
#include "appd/deadline.hpp"

namespace appd {

SpanningTree::SpanningTree(std::size_t n, TreeSense sense,
                           std::vector<TreeEdge> edges)
    : n_(n), sense_(sense), edges_(std::move(edges)), adjacency_(n) {
  if (n_ == 0 || edges_.size() != n_ - 1) {
    throw InvalidArgument("a spanning tree over " + std::to_string(n_) +
                          " vertices needs exactly n-1 edges");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const TreeEdge& edge = edges_[e];
    if (edge.u >= n_ || edge.v >= n_ || edge.u == edge.v) {
      throw InvalidArgument("tree edge " + std::to_string(e) +
                            " has invalid endpoints");
    }
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
  }
}

double SpanningTree::total_weight() const noexcept {
  double total = 0.0;
  for (const TreeEdge& e : edges_) total += e.weight;
  return total;
}

SpanningTree prim_spanning_tree(const DenseGraph& graph, TreeSense sense,
                                const Deadline* deadline) {
  const std::size_t n = graph.size();
  const double sign = sense == TreeSense::minimum ? 1.0 : -1.0;
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, none);
  std::vector<char> in_tree(n, 0);
  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);

  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    if (deadline != nullptr) deadline->check();
    const auto row = graph.row(current);
    std::size_t best = none;
    double best_key = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double k = sign * row[v];
      if (k < key[v]) {
        key[v] = k;
        parent[v] = current;
      }
      if (best == none || key[v] < best_key) {
        best = v;
        best_key = key[v];
      }
    }
    in_tree[best] = 1;
    edges.push_back({parent[best], best, graph.weight(parent[best], best),
                     step - 1});
    current = best;
  }
  return SpanningTree(n, sense, std::move(edges));
}

void write_tree_csv(std::ostream& out, const SpanningTree& tree) {
  for (const TreeEdge& e : tree.edges()) {
    out << e.u << ',' << e.v << ',' << format_double(e.weight) << '\n';
  }
}

}  // namespace appd
