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

#include "appd/baselines.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "appd/spanning_tree.hpp"

namespace appd {
namespace {

template <bool Minimax>
inline void relax_row(double* row, double via, const double* through,
                      std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if constexpr (Minimax) {
      const double cand = via > through[j] ? via : through[j];
      row[j] = cand < row[j] ? cand : row[j];
    } else {
      const double cand = via < through[j] ? via : through[j];
      row[j] = cand > row[j] ? cand : row[j];
    }
  }
}

// Intermediates are taken kBlock at a time. snapshot[t] holds row k0+t as
// it stands when step k0+t runs (steps < k0+t applied), so applying the
// block's steps to each row in order performs exactly the updates of the
// plain k-i-j loop while the row stays in cache.
template <bool Minimax>
void relax_row_major(DistanceMatrix& d, const Deadline* deadline) {
  constexpr std::size_t kBlock = 8;
  const std::size_t n = d.size();
  std::vector<double> snapshot(kBlock * n);
  for (std::size_t k0 = 0; k0 < n; k0 += kBlock) {
    if (deadline != nullptr) deadline->check();
    const std::size_t count = std::min(kBlock, n - k0);
    for (std::size_t t = 0; t < count; ++t) {
      double* snap = snapshot.data() + t * n;
      std::copy_n(d.row(k0 + t).data(), n, snap);
      for (std::size_t u = 0; u < t; ++u) {
        relax_row<Minimax>(snap, snap[k0 + u], snapshot.data() + u * n, n);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      double* row = d.row(i).data();
      for (std::size_t t = 0; t < count; ++t) {
        relax_row<Minimax>(row, row[k0 + t], snapshot.data() + t * n, n);
      }
    }
  }
}

template <bool Minimax>
void relax_column_major(DistanceMatrix& d, const Deadline* deadline) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (deadline != nullptr) deadline->check();
    // j before i: the textbook loop with the two inner indices swapped.
    for (std::size_t j = 0; j < n; ++j) {
      const double via = d.at(k, j);
      for (std::size_t i = 0; i < n; ++i) {
        const double a = d.at(i, k);
        double& cell = d.at(i, j);
        if constexpr (Minimax) {
          cell = std::min(cell, std::max(a, via));
        } else {
          cell = std::max(cell, std::min(a, via));
        }
      }
    }
  }
}

}  // namespace

DistanceMatrix appd_floyd(const DenseGraph& graph, Problem problem,
                          const FloydOptions& options) {
  const std::size_t n = graph.size();
  DistanceMatrix d(n, problem);
  std::copy(graph.weights().begin(), graph.weights().end(), d.values().begin());

  const bool minimax = problem == Problem::minimax;
  if (options.inner_order == InnerLoopOrder::row_major) {
    minimax ? relax_row_major<true>(d, options.deadline)
            : relax_row_major<false>(d, options.deadline);
  } else {
    minimax ? relax_column_major<true>(d, options.deadline)
            : relax_column_major<false>(d, options.deadline);
  }
  // The relaxation treats i == j like any other pair; paths from a vertex
  // to itself are defined as zero.
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 0.0;
  return d;
}

DistanceMatrix appd_mst_path(const DenseGraph& graph, Problem problem,
                             const Deadline* deadline) {
  const bool minimax = problem == Problem::minimax;
  const SpanningTree tree = prim_spanning_tree(
      graph, minimax ? TreeSense::minimum : TreeSense::maximum, deadline);
  const std::size_t n = tree.size();

  // Root at 0: parent, weight of the edge to the parent, depth.
  std::vector<std::size_t> parent(n, 0);
  std::vector<double> up_weight(n, 0.0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : tree.adjacency()[v]) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      parent[inc.neighbor] = v;
      up_weight[inc.neighbor] = tree.edges()[inc.edge].weight;
      depth[inc.neighbor] = depth[v] + 1;
      stack.push_back(inc.neighbor);
    }
  }

  const auto worse = [minimax](double acc, double w) {
    return minimax ? std::max(acc, w) : std::min(acc, w);
  };
  DistanceMatrix d(n, problem);
  for (std::size_t i = 0; i < n; ++i) {
    if (deadline != nullptr) deadline->check();
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t a = i;
      std::size_t b = j;
      bool first = true;
      double acc = 0.0;
      const auto take = [&](double w) {
        acc = first ? w : worse(acc, w);
        first = false;
      };
      while (depth[a] > depth[b]) {
        take(up_weight[a]);
        a = parent[a];
      }
      while (depth[b] > depth[a]) {
        take(up_weight[b]);
        b = parent[b];
      }
      while (a != b) {
        take(up_weight[a]);
        take(up_weight[b]);
        a = parent[a];
        b = parent[b];
      }
      d.at(i, j) = acc;
      d.at(j, i) = acc;
    }
  }
  return d;
}

double PathEnumeration::distance(Problem problem) const {
  if (extremes.empty()) return 0.0;
  return problem == Problem::minimax
             ? *std::min_element(extremes.begin(), extremes.end())
             : *std::max_element(extremes.begin(), extremes.end());
}

PathEnumeration enumerate_paths(const DenseGraph& graph, std::size_t source,
                                std::size_t target, Problem problem) {
  const std::size_t n = graph.size();
  if (n > kBruteForceMaxVertices) {
    throw InvalidArgument("brute-force path enumeration is limited to " +
                          std::to_string(kBruteForceMaxVertices) +
                          " vertices (got " + std::to_string(n) +
                          "); the number of simple paths grows factorially");
  }
  if (source >= n || target >= n) throw InvalidArgument("vertex out of range");

  PathEnumeration result;
  result.source = source;
  result.target = target;
  if (source == target) return result;

  std::vector<std::size_t> path{source};
  std::vector<char> on_path(n, 0);
  on_path[source] = 1;

  // max_weight(p) for minimax, min_weight(p) for widest.
  const auto extreme = [&](const std::vector<std::size_t>& p) {
    double e = graph.weight(p[0], p[1]);
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      const double w = graph.weight(p[k], p[k + 1]);
      e = problem == Problem::minimax ? std::max(e, w) : std::min(e, w);
    }
    return e;
  };

  const auto extend = [&](auto&& self) -> void {
    const std::size_t last = path.back();
    for (std::size_t next = 0; next < n; ++next) {
      if (next == last || on_path[next]) continue;
      path.push_back(next);
      if (next == target) {
        result.extremes.push_back(extreme(path));
        result.paths.push_back(path);
      } else {
        on_path[next] = 1;
        self(self);
        on_path[next] = 0;
      }
      path.pop_back();
    }
  };
  extend(extend);
  return result;
}

DistanceMatrix brute_force_appd(const DenseGraph& graph, Problem problem) {
  const std::size_t n = graph.size();
  if (n > kBruteForceMaxVertices) {
    throw InvalidArgument("brute_force_appd is limited to " +
                          std::to_string(kBruteForceMaxVertices) +
                          " vertices (got " + std::to_string(n) + ")");
  }
  DistanceMatrix d(n, problem);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = enumerate_paths(graph, i, j, problem).distance(problem);
      d.at(i, j) = v;
      d.at(j, i) = v;
    }
  }
  return d;
}

}  // namespace appd
