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

#include "appd/calc_copy.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

namespace appd {
namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

TreeSense tree_sense_for(Problem problem) {
  return problem == Problem::minimax ? TreeSense::minimum : TreeSense::maximum;
}

// Processes removal_order[begin, end) on a forest from which every earlier
// edge has already been removed.
CalcCopyStats fill_range(const SpanningTree& tree,
                         const std::vector<std::size_t>& order,
                         std::size_t begin, std::size_t end,
                         DistanceMatrix& matrix, const Deadline* deadline,
                         const std::atomic<bool>* stop) {
  Forest forest(tree);
  for (std::size_t k = 0; k < begin; ++k) forest.remove(order[k]);

  CalcCopyStats stats;
  std::vector<std::size_t> side_u;
  std::vector<std::size_t> side_v;
  const auto& edges = tree.edges();
  for (std::size_t k = begin; k < end; ++k) {
    if (deadline != nullptr) deadline->check();
    if (stop != nullptr && stop->load(std::memory_order_relaxed)) break;

    const TreeEdge& edge = edges[order[k]];
    forest.remove(order[k]);
    side_u.clear();
    side_v.clear();
    forest.component(edge.u, side_u);
    forest.component(edge.v, side_v);
    stats.traversal_cost += side_u.size() + side_v.size();

    const double w = edge.weight;
    for (std::size_t a : side_u) {
      double* row = matrix.row(a).data();
      for (std::size_t b : side_v) row[b] = w;
    }
    for (std::size_t b : side_v) {
      double* row = matrix.row(b).data();
      for (std::size_t a : side_u) row[a] = w;
    }
    stats.pair_writes += static_cast<std::uint64_t>(side_u.size()) * side_v.size();
  }
  return stats;
}

// Vertex order in which every side of every cut is a contiguous range.
// Components are merged in reverse removal order by concatenating their
// vertex lists; the final list is the order. Returns position of each vertex.
std::vector<std::size_t> cut_contiguous_positions(
    const SpanningTree& tree, const std::vector<std::size_t>& order) {
  const std::size_t n = tree.size();
  std::vector<std::size_t> root(n);
  std::vector<std::size_t> head(n);
  std::vector<std::size_t> tail(n);
  std::vector<std::size_t> next(n, kNoParent);
  std::vector<std::size_t> size(n, 1);
  std::iota(root.begin(), root.end(), std::size_t{0});
  std::iota(head.begin(), head.end(), std::size_t{0});
  std::iota(tail.begin(), tail.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  std::size_t last = 0;
  for (std::size_t k = order.size(); k-- > 0;) {
    const TreeEdge& e = tree.edges()[order[k]];
    std::size_t ru = find(e.u);
    std::size_t rv = find(e.v);
    if (size[ru] < size[rv]) std::swap(ru, rv);
    next[tail[ru]] = head[rv];
    tail[ru] = tail[rv];
    root[rv] = ru;
    size[ru] += size[rv];
    last = ru;
  }
  std::vector<std::size_t> position(n);
  std::size_t pos = 0;
  for (std::size_t v = head[last]; v != kNoParent; v = next[v]) position[v] = pos++;
  return position;
}

SpanningTree relabeled(const SpanningTree& tree,
                       const std::vector<std::size_t>& position) {
  std::vector<TreeEdge> edges = tree.edges();
  for (TreeEdge& e : edges) {
    e.u = position[e.u];
    e.v = position[e.v];
  }
  return SpanningTree(tree.size(), tree.sense(), std::move(edges));
}

// Turns m[i][j] (relabeled ids) into m'[r][c] = m[position[r]][position[c]]
// using one row of extra storage: columns first, then whole rows along the
// cycles of the permutation.
void restore_labels(DistanceMatrix& m, const std::vector<std::size_t>& position) {
  const std::size_t n = m.size();
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = m.row(i).data();
    for (std::size_t c = 0; c < n; ++c) tmp[c] = row[position[c]];
    std::copy(tmp.begin(), tmp.end(), row);
  }
  std::vector<char> placed(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (placed[start] || position[start] == start) continue;
    std::copy_n(m.row(start).data(), n, tmp.data());
    std::size_t cur = start;
    while (position[cur] != start) {
      std::copy_n(m.row(position[cur]).data(), n, m.row(cur).data());
      placed[cur] = 1;
      cur = position[cur];
    }
    std::copy(tmp.begin(), tmp.end(), m.row(cur).data());
    placed[cur] = 1;
  }
}

// Cost of each cut in removal order: size of both sides plus the pairs
// written. Sides are recovered by merging in reverse removal order.
std::vector<double> cut_costs(const SpanningTree& tree,
                              const std::vector<std::size_t>& order) {
  const std::size_t n = tree.size();
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<double> cost(order.size());
  for (std::size_t k = order.size(); k-- > 0;) {
    const TreeEdge& e = tree.edges()[order[k]];
    std::size_t ru = find(e.u);
    std::size_t rv = find(e.v);
    const double su = static_cast<double>(size[ru]);
    const double sv = static_cast<double>(size[rv]);
    cost[k] = su * sv + su + sv;
    if (size[ru] < size[rv]) std::swap(ru, rv);
    parent[rv] = ru;
    size[ru] += size[rv];
  }
  return cost;
}

// Splits [0, costs.size()) into at most `parts` contiguous chunks of
// roughly equal total cost. Returns chunk boundaries.
std::vector<std::size_t> balanced_bounds(const std::vector<double>& costs,
                                         std::size_t parts) {
  const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
  std::vector<std::size_t> bounds{0};
  double acc = 0.0;
  for (std::size_t k = 0; k < costs.size(); ++k) {
    acc += costs[k];
    const double target =
        total * static_cast<double>(bounds.size()) / static_cast<double>(parts);
    if (acc >= target && bounds.size() < parts && k + 1 < costs.size()) {
      bounds.push_back(k + 1);
    }
  }
  bounds.push_back(costs.size());
  return bounds;
}

// Runs every cut of `order`, split across options.workers threads.
CalcCopyStats fill_cuts(const SpanningTree& tree,
                        const std::vector<std::size_t>& order,
                        DistanceMatrix& matrix,
                        const CalcCopyOptions& options) {
  const std::size_t workers =
      std::clamp<std::size_t>(options.workers, 1, order.size());
  if (workers == 1) {
    return fill_range(tree, order, 0, order.size(), matrix, options.deadline,
                      nullptr);
  }

  const auto bounds = balanced_bounds(cut_costs(tree, order), workers);
  const std::size_t chunks = bounds.size() - 1;
  std::vector<CalcCopyStats> stats(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<bool> stop{false};
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      threads.emplace_back([&, c] {
        try {
          stats[c] = fill_range(tree, order, bounds[c], bounds[c + 1], matrix,
                                options.deadline, &stop);
        } catch (...) {
          errors[c] = std::current_exception();
          stop.store(true, std::memory_order_relaxed);
        }
      });
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  CalcCopyStats total;
  for (const auto& s : stats) {
    total.pair_writes += s.pair_writes;
    total.traversal_cost += s.traversal_cost;
  }
  return total;
}

}  // namespace

Forest::Forest(const SpanningTree& tree) : adjacency_(tree.adjacency()) {
  endpoints_.reserve(tree.edges().size());
  for (const TreeEdge& e : tree.edges()) endpoints_.emplace_back(e.u, e.v);
}

void Forest::remove(std::size_t edge) {
  const auto [u, v] = endpoints_.at(edge);
  const auto drop = [edge](std::vector<Incidence>& list) {
    const auto it = std::find_if(list.begin(), list.end(),
                                 [edge](const Incidence& i) { return i.edge == edge; });
    if (it == list.end()) throw InvalidArgument("edge already removed");
    *it = list.back();
    list.pop_back();
  };
  drop(adjacency_[u]);
  drop(adjacency_[v]);
  ++removed_;
}

void Forest::component(std::size_t start, std::vector<std::size_t>& out) {
  stack_.clear();
  stack_.emplace_back(start, kNoParent);
  while (!stack_.empty()) {
    const auto [vertex, from] = stack_.back();
    stack_.pop_back();
    out.push_back(vertex);
    for (const Incidence& inc : adjacency_[vertex]) {
      if (inc.neighbor != from) stack_.emplace_back(inc.neighbor, vertex);
    }
  }
}

std::vector<std::size_t> removal_order(const SpanningTree& tree,
                                       Problem problem) {
  const auto& edges = tree.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // edges are stored in insertion order, so a stable sort keeps equal
  // weights in ascending seq.
  if (problem == Problem::minimax) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a].weight > edges[b].weight;
    });
  } else {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a].weight < edges[b].weight;
    });
  }
  return order;
}

CalcCopyResult calc_copy_from_tree(const SpanningTree& tree, Problem problem,
                                   const CalcCopyOptions& options) {
  if (tree.sense() != tree_sense_for(problem)) {
    throw InvalidArgument(problem == Problem::minimax
                              ? "minimax distances need a minimum spanning tree"
                              : "widest distances need a maximum spanning tree");
  }
  const std::size_t n = tree.size();
  const auto order = removal_order(tree, problem);
  if (order.empty()) return {DistanceMatrix(n, problem), {}};

  // The cuts run on a relabeled copy of the tree where both sides of each
  // cut are id ranges, so every cut fills a compact block. The matrix is
  // then permuted in place back to the caller's vertex ids.
  const auto position = cut_contiguous_positions(tree, order);
  CalcCopyResult result{DistanceMatrix(n, problem), {}};
  result.stats = fill_cuts(relabeled(tree, position), order, result.matrix, options);
  restore_labels(result.matrix, position);
  return result;
}

CalcCopyResult appd_calc_copy_instrumented(const DenseGraph& graph,
                                           Problem problem,
                                           const CalcCopyOptions& options) {
  const SpanningTree tree =
      prim_spanning_tree(graph, tree_sense_for(problem), options.deadline);
  return calc_copy_from_tree(tree, problem, options);
}

DistanceMatrix appd_calc_copy(const DenseGraph& graph, Problem problem,
                              const CalcCopyOptions& options) {
  return appd_calc_copy_instrumented(graph, problem, options).matrix;
}

}  // namespace appd
