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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace appd {

/// Which path problem a distance matrix answers.
///  - minimax: minimise the largest edge weight along a path.
///  - widest:  maximise the smallest edge weight along a path.
enum class Problem { minimax, widest };

std::string_view to_string(Problem problem) noexcept;
Problem parse_problem(std::string_view text);

/// n points in d dimensions, row-major. Every coordinate is finite.
class PointSet {
 public:
  /// Throws ValidationError naming the first non-finite (row, column).
  PointSet(std::size_t n, std::size_t d, std::vector<double> coords);

  std::size_t size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return d_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * d_, d_};
  }
  std::span<const double> coords() const noexcept { return coords_; }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> coords_;
};

/// Complete undirected graph stored as a symmetric n x n weight matrix.
///
/// Construction validates that every entry is finite, that the diagonal is
/// exactly zero and that w(i,j) and w(j,i) are the same value. Nothing is
/// repaired silently. Negative zero is stored as +0.0 so that equal weights
/// are also bit-identical.
class DenseGraph {
 public:
  DenseGraph(std::size_t n, std::vector<double> weights);

  std::size_t size() const noexcept { return n_; }
  double weight(std::size_t i, std::size_t j) const noexcept {
    return weights_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {weights_.data() + i * n_, n_};
  }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Same topology with every weight negated.
  DenseGraph negated() const;

  /// Relabels vertices: vertex i of the result is vertex perm[i] of *this.
  DenseGraph permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  struct Trusted {};
  DenseGraph(Trusted, std::size_t n, std::vector<double> weights)
      : n_(n), weights_(std::move(weights)) {}

  std::size_t n_;
  std::vector<double> weights_;
};

/// All-pairs path distance matrix. Diagonal is zero, values are symmetric,
/// and every off-diagonal entry is a copy of some edge weight.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, Problem problem)
      : n_(n), problem_(problem), values_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  Problem problem() const noexcept { return problem_; }

  double at(std::size_t i, std::size_t j) const noexcept {
    return values_[i * n_ + j];
  }
  double& at(std::size_t i, std::size_t j) noexcept {
    return values_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * n_, n_};
  }
  std::span<double> row(std::size_t i) noexcept {
    return {values_.data() + i * n_, n_};
  }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  Problem problem_;
  std::vector<double> values_;
};

/// Distance between two points of equal dimension.
using PointMetric =
    std::function<double(std::span<const double>, std::span<const double>)>;

double euclidean(std::span<const double> a, std::span<const double> b);

/// Complete graph whose edge weights are pairwise point distances.
/// Each unordered pair is evaluated once and mirrored.
DenseGraph complete_graph_from_points(const PointSet& points,
                                      const PointMetric& metric = euclidean);

}  // namespace appd
