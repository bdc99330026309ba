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

#include "appd/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>

#include "appd/error.hpp"

namespace appd {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line,
                   std::size_t column) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": cannot parse '" +
                     std::string(field) + "' as a number");
  }
  return value;
}

void write_row(std::ostream& out, std::span<const double> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != 0) out.put(',');
    out << format_double(row[j]);
  }
  out.put('\n');
}

}  // namespace

GraphFormat parse_graph_format(std::string_view text) {
  if (text == "points") return GraphFormat::points;
  if (text == "matrix") return GraphFormat::matrix;
  throw InvalidArgument("unknown format '" + std::string(text) +
                        "' (expected points or matrix)");
}

std::vector<std::vector<double>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    std::vector<double> row;
    std::size_t column = 0;
    while (true) {
      const auto comma = text.find(',');
      row.push_back(parse_field(text.substr(0, comma), line_no, column));
      ++column;
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw ParseError("read error");
  return rows;
}

PointSet read_points_csv(std::istream& in) {
  auto rows = read_csv_rows(in);
  if (rows.empty()) throw ParseError("points file contains no rows");
  const std::size_t n = rows.size();
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(n * d);
  for (const auto& row : rows) coords.insert(coords.end(), row.begin(), row.end());
  return PointSet(n, d, std::move(coords));
}

DenseGraph read_matrix_csv(std::istream& in) {
  auto rows = read_csv_rows(in);
  if (rows.empty()) throw ParseError("matrix file contains no rows");
  const std::size_t n = rows.size();
  if (rows.front().size() != n) {
    throw ParseError("matrix has " + std::to_string(n) + " rows but " +
                     std::to_string(rows.front().size()) + " columns");
  }
  std::vector<double> weights;
  weights.reserve(n * n);
  for (const auto& row : rows) weights.insert(weights.end(), row.begin(), row.end());
  return DenseGraph(n, std::move(weights));
}

DenseGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  if (format == GraphFormat::points) {
    return complete_graph_from_points(read_points_csv(in));
  }
  return read_matrix_csv(in);
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_matrix_csv(std::ostream& out, const DistanceMatrix& matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) write_row(out, matrix.row(i));
}

void write_matrix_csv(std::ostream& out, const DenseGraph& graph) {
  for (std::size_t i = 0; i < graph.size(); ++i) write_row(out, graph.row(i));
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) write_row(out, points.point(i));
}

}  // namespace appd
