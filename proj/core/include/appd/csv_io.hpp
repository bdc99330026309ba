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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "appd/dense_graph.hpp"

namespace appd {

/// On-disk graph encodings.
///  - points: one point per line, d comma-separated coordinates.
///  - matrix: n lines of n comma-separated weights.
/// Neither format has a header row.
enum class GraphFormat { points, matrix };

GraphFormat parse_graph_format(std::string_view text);

/// Parses rows of comma-separated doubles. Blank lines are
/// skipped, surrounding whitespace and a trailing '\r' are ignored.
/// Throws ParseError on ragged rows or unparsable fields.
std::vector<std::vector<double>> read_csv_rows(std::istream& in);

PointSet read_points_csv(std::istream& in);
DenseGraph read_matrix_csv(std::istream& in);

/// Loads a graph; points files are converted with complete_graph_from_points.
DenseGraph load_graph(const std::filesystem::path& path, GraphFormat format);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

void write_matrix_csv(std::ostream& out, const DistanceMatrix& matrix);
void write_matrix_csv(std::ostream& out, const DenseGraph& graph);
void write_points_csv(std::ostream& out, const PointSet& points);

}  // namespace appd
