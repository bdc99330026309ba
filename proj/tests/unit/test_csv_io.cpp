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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "appd/csv_io.hpp"
#include "appd/error.hpp"
#include "appd/random_points.hpp"

using namespace appd;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("appd_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("smallest matrix file") {
  std::istringstream in("0,2\n2,0\n");
  const DenseGraph g = read_matrix_csv(in);
  REQUIRE(g.size() == 2);
  CHECK(g.weight(0, 1) == 2.0);
}

TEST_CASE("whitespace, CRLF, blank lines and leading plus signs are tolerated") {
  std::istringstream in(" 0 , +1.5\r\n\n1.5,0\r\n\n");
  const DenseGraph g = read_matrix_csv(in);
  CHECK(g.weight(1, 0) == 1.5);
}

TEST_CASE("asymmetric matrix is rejected at the offending cell") {
  std::istringstream in("0,1\n2,0\n");
  try {
    read_matrix_csv(in);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("matrix validation failures") {
  SUBCASE("nonzero diagonal") {
    std::istringstream in("1,2\n2,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ValidationError);
  }
  SUBCASE("nan") {
    std::istringstream in("0,nan\nnan,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ValidationError);
  }
  SUBCASE("inf") {
    std::istringstream in("0,inf\ninf,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ValidationError);
  }
  SUBCASE("ragged rows") {
    std::istringstream in("0,1,2\n1,0\n2,1,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
  }
  SUBCASE("not square") {
    std::istringstream in("0,1,2\n1,0,2\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
  }
  SUBCASE("garbage field") {
    std::istringstream in("0,x\n1,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
  }
  SUBCASE("empty field") {
    std::istringstream in("0,\n1,0\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
  }
  SUBCASE("empty file") {
    std::istringstream in("\n\n");
    CHECK_THROWS_AS(read_matrix_csv(in), ParseError);
  }
}

TEST_CASE("points file loads like the in-memory conversion") {
  const PointSet points = generate_random_points(4, 3, 11);
  std::ostringstream text;
  write_points_csv(text, points);
  const auto path = temp_file("points.csv", text.str());
  const DenseGraph loaded = load_graph(path, GraphFormat::points);
  CHECK(loaded == complete_graph_from_points(points));
  std::filesystem::remove(path);
}

TEST_CASE("non-finite point coordinate names row and column") {
  std::istringstream in("0,0\n1,inf\n");
  try {
    read_points_csv(in);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("missing file is a parse error") {
  CHECK_THROWS_AS(load_graph("/nonexistent/appd.csv", GraphFormat::matrix), ParseError);
}

TEST_CASE("format names") {
  CHECK(parse_graph_format("points") == GraphFormat::points);
  CHECK(parse_graph_format("matrix") == GraphFormat::matrix);
  CHECK_THROWS_AS(parse_graph_format("json"), InvalidArgument);
}

TEST_CASE("written doubles parse back to the identical value") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10000; ++k) {
    const double v = std::bit_cast<double>(rng());
    if (!std::isfinite(v)) continue;
    const std::string text = format_double(v);
    std::istringstream in(text);
    const auto rows = read_csv_rows(in);
    REQUIRE(rows.size() == 1);
    CHECK(std::bit_cast<std::uint64_t>(rows[0][0]) == std::bit_cast<std::uint64_t>(v));
  }
  CHECK(format_double(7.0) == "7");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("matrix writer round-trips a graph exactly") {
  const DenseGraph g = complete_graph_from_points(generate_random_points(9, 2, 3));
  std::ostringstream out;
  write_matrix_csv(out, g);
  std::istringstream in(out.str());
  CHECK(read_matrix_csv(in) == g);
}
