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

#include "appd/dense_graph.hpp"

#include <cmath>
#include <string>

#include "appd/error.hpp"

namespace appd {

std::string_view to_string(Problem problem) noexcept {
  return problem == Problem::minimax ? "minimax" : "widest";
}

Problem parse_problem(std::string_view text) {
  if (text == "minimax") return Problem::minimax;
  if (text == "widest") return Problem::widest;
  throw InvalidArgument("unknown problem '" + std::string(text) +
                        "' (expected minimax or widest)");
}

PointSet::PointSet(std::size_t n, std::size_t d, std::vector<double> coords)
    : n_(n), d_(d), coords_(std::move(coords)) {
  if (n_ == 0 || d_ == 0) {
    throw InvalidArgument("point set needs at least one point and one dimension");
  }
  if (coords_.size() != n_ * d_) {
    throw InvalidArgument("point set expects " + std::to_string(n_ * d_) +
                          " coordinates, got " + std::to_string(coords_.size()));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < d_; ++k) {
      if (!std::isfinite(coords_[i * d_ + k])) {
        throw ValidationError("non-finite coordinate at row " +
                                  std::to_string(i) + ", column " +
                                  std::to_string(k),
                              i, k);
      }
    }
  }
}

DenseGraph::DenseGraph(std::size_t n, std::vector<double> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ == 0) throw InvalidArgument("graph needs at least one vertex");
  if (weights_.size() != n_ * n_) {
    throw InvalidArgument("graph with " + std::to_string(n_) +
                          " vertices expects " + std::to_string(n_ * n_) +
                          " weights, got " + std::to_string(weights_.size()));
  }
  const auto cell = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      double& w = weights_[i * n_ + j];
      if (!std::isfinite(w)) {
        throw ValidationError("non-finite weight at " + cell(i, j), i, j);
      }
      if (w == 0.0) w = 0.0;  // fold -0.0
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (weights_[i * n_ + i] != 0.0) {
      throw ValidationError("nonzero diagonal weight at " + cell(i, i), i, i);
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (weights_[i * n_ + j] != weights_[j * n_ + i]) {
        throw ValidationError("asymmetric weight at " + cell(i, j) + ": " +
                                  std::to_string(weights_[i * n_ + j]) +
                                  " vs " + std::to_string(weights_[j * n_ + i]),
                              i, j);
      }
    }
  }
}

DenseGraph DenseGraph::negated() const {
  std::vector<double> out(weights_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = weights_[k] == 0.0 ? 0.0 : -weights_[k];
  }
  return DenseGraph(Trusted{}, n_, std::move(out));
}

DenseGraph DenseGraph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) {
    throw InvalidArgument("permutation size does not match vertex count");
  }
  std::vector<bool> seen(n_, false);
  for (std::size_t p : perm) {
    if (p >= n_ || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  std::vector<double> out(weights_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i * n_ + j] = weights_[perm[i] * n_ + perm[j]];
    }
  }
  return DenseGraph(Trusted{}, n_, std::move(out));
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DenseGraph complete_graph_from_points(const PointSet& points,
                                      const PointMetric& metric) {
  const std::size_t n = points.size();
  std::vector<double> weights(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = metric(points.point(i), points.point(j));
      weights[i * n + j] = w;
      weights[j * n + i] = w;
    }
  }
  return DenseGraph(n, std::move(weights));
}

}  // namespace appd
