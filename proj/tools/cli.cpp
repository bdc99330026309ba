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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include "appd/baselines.hpp"
#include "appd/calc_copy.hpp"
#include "appd/csv_io.hpp"
#include "appd/error.hpp"
#include "appd/random_points.hpp"
#include "appd/version.hpp"

namespace appd::cli {
namespace {

using TableFactory = std::function<AlgorithmTable(unsigned workers)>;

struct Failure {
  std::string what;
};

std::optional<Failure> compare(const DistanceMatrix& expected,
                               const DistanceMatrix& actual,
                               const std::string& expected_name,
                               const std::string& actual_name) {
  if (actual.size() != expected.size()) {
    return Failure{actual_name + " returned a " + std::to_string(actual.size()) +
                   "x" + std::to_string(actual.size()) + " matrix"};
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (expected.at(i, j) != actual.at(i, j)) {
        return Failure{"cell (" + std::to_string(i) + "," + std::to_string(j) +
                       "): " + expected_name + "=" +
                       format_double(expected.at(i, j)) + " " + actual_name +
                       "=" + format_double(actual.at(i, j))};
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_invariants(const DenseGraph& graph,
                                        const DistanceMatrix& d,
                                        const std::string& name) {
  const std::size_t n = d.size();
  const auto cell = [](std::size_t i, std::size_t j) {
    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::vector<double> weights(graph.weights().begin(), graph.weights().end());
  std::sort(weights.begin(), weights.end());
  const bool minimax = d.problem() == Problem::minimax;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.at(i, i) != 0.0) return Failure{name + ": nonzero diagonal at " + cell(i, i)};
    for (std::size_t j = 0; j < n; ++j) {
      if (d.at(i, j) != d.at(j, i)) return Failure{name + ": asymmetric " + cell(i, j)};
      if (!std::binary_search(weights.begin(), weights.end(), d.at(i, j))) {
        return Failure{name + ": " + cell(i, j) + " is not an edge weight"};
      }
      if (i == j) continue;  // the diagonal is zero by definition
      for (std::size_t k = 0; k < n; ++k) {
        const double ik = d.at(i, k);
        const double kj = d.at(k, j);
        const bool ok = minimax ? d.at(i, j) <= std::max(ik, kj)
                                : d.at(i, j) >= std::min(ik, kj);
        if (!ok) {
          return Failure{name + ": " + cell(i, j) + " violates the " +
                         (minimax ? "max" : "min") + " triangle inequality via " +
                         std::to_string(k)};
        }
      }
    }
  }
  return std::nullopt;
}

int compute(const std::string& input, const std::string& format,
            Problem problem, const std::string& algo, const std::string& output,
            const AlgorithmTable& table, std::ostream& out) {
  const DenseGraph graph = load_graph(input, parse_graph_format(format));
  const NamedAlgorithm& algorithm = find_algorithm(table, algo);
  const DistanceMatrix result = algorithm.run(graph, problem, Deadline{});
  if (output.empty() || output == "-") {
    write_matrix_csv(out, result);
    return kOk;
  }
  std::ofstream file(output);
  if (!file) throw ParseError("cannot open " + output + " for writing");
  write_matrix_csv(file, result);
  if (!file) throw ParseError("failed writing " + output);
  return kOk;
}

void print_fits(std::ostream& out, const std::vector<ScalingFit>& fits) {
  out << std::left << std::setw(12) << "algorithm" << std::setw(10) << "min_n"
      << std::setw(10) << "max_n" << "exponent\n";
  for (const auto& fit : fits) {
    out << std::left << std::setw(12) << fit.algorithm << std::setw(10)
        << fit.min_n << std::setw(10) << fit.max_n << std::fixed
        << std::setprecision(3) << fit.exponent << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

int bench(const BenchConfig& config, const std::string& report_path,
          const std::string& summary_path, const AlgorithmTable& table,
          std::ostream& out, std::ostream& err) {
  const BenchReport report = run_benchmark(config, table);
  const auto fits = summarize(report);
  {
    std::ofstream file(report_path);
    if (!file) throw ParseError("cannot open " + report_path + " for writing");
    write_report_csv(file, report);
  }
  {
    std::ofstream file(summary_path);
    if (!file) throw ParseError("cannot open " + summary_path + " for writing");
    write_summary_csv(file, fits);
  }
  for (const auto& row : report.rows) {
    err << row.algorithm << " n=" << row.n << ": ";
    if (row.status == RunStatus::ok) {
      err << format_double(*row.wall_seconds) << " s\n";
    } else {
      err << "timeout\n";
    }
  }
  print_fits(out, fits);
  for (const auto& m : report.mismatches) {
    err << "checksum mismatch at n=" << m.n << " between " << m.first
        << " and " << m.second << '\n';
  }
  return report.mismatches.empty() ? kOk : kMismatch;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, const TableFactory& make_table) {
  CLI::App app{"All-pairs minimax and widest path distances on dense graphs"};
  app.name("appd");
  app.set_version_flag("--version", std::string("appd ") + kVersion +
                                        " (interface " + kInterfaceVersion + ")");
  app.require_subcommand(1);

  const std::vector<std::string> problems{"minimax", "widest"};
  std::string problem_text = "minimax";
  std::string algo = "algo4";
  unsigned parallel = 1;

  auto* compute_cmd = app.add_subcommand("compute", "Compute an APPD matrix");
  std::string input;
  std::string format = "matrix";
  std::string output;
  compute_cmd->add_option("--input", input, "Input CSV file")->required();
  compute_cmd->add_option("--format", format, "points or matrix")
      ->check(CLI::IsMember({"points", "matrix"}))
      ->capture_default_str();
  compute_cmd->add_option("--problem", problem_text)
      ->check(CLI::IsMember(problems))
      ->capture_default_str();
  compute_cmd->add_option("--algo", algo, "algo4, floyd or mst-path")
      ->check(CLI::IsMember({"algo4", "floyd", "mst-path"}))
      ->capture_default_str();
  compute_cmd->add_option("--output", output, "Output CSV (default: stdout)");
  compute_cmd->add_option("--parallel", parallel, "Worker threads (algo4 only)")
      ->check(CLI::PositiveNumber);

  auto* bench_cmd = app.add_subcommand("bench", "Time APPD algorithms on random points");
  BenchConfig config;
  config.sizes = default_bench_sizes();
  std::string report_path = "bench_report.csv";
  std::string summary_path = "bench_summary.csv";
  bench_cmd->add_option("--sizes", config.sizes, "Comma-separated vertex counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--algos", config.algorithms, "Comma-separated algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"algo4", "floyd", "mst-path"}))
      ->capture_default_str();
  bench_cmd->add_option("--problem", problem_text)
      ->check(CLI::IsMember(problems))
      ->capture_default_str();
  bench_cmd->add_option("--timeout", config.timeout_seconds, "Seconds per run")
      ->capture_default_str();
  bench_cmd->add_option("--dim", config.dimension, "Point dimension")
      ->capture_default_str();
  bench_cmd->add_option("--seed", config.seed)->capture_default_str();
  bench_cmd->add_option("--reps", config.repetitions, "Runs per cell; fastest kept")
      ->capture_default_str();
  bench_cmd->add_option("--report", report_path)->capture_default_str();
  bench_cmd->add_option("--summary", summary_path)->capture_default_str();
  bench_cmd->add_option("--parallel", parallel, "Worker threads (algo4 only)")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all algorithms");
  VerifyConfig verify;
  verify_cmd->add_option("--n-max", verify.n_max, "Largest graph size")
      ->capture_default_str();
  verify_cmd->add_option("--seeds", verify.seeds, "Number of seeds")
      ->capture_default_str();
  verify_cmd->add_option("--problem", problem_text)
      ->check(CLI::IsMember(problems))
      ->capture_default_str();

  std::vector<std::string> storage{"appd"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Problem problem = parse_problem(problem_text);
    if (*compute_cmd) {
      if (parallel > 1 && algo != "algo4") {
        err << "--parallel applies to --algo algo4 only\n" << app.help();
        return kUsage;
      }
      return compute(input, format, problem, algo, output, make_table(parallel), out);
    }
    if (*bench_cmd) {
      config.problem = problem;
      try {
        config.validate();
      } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n' << bench_cmd->help();
        return kUsage;
      }
      return bench(config, report_path, summary_path, make_table(parallel), out, err);
    }
    if (*verify_cmd) {
      if (verify.n_max < 2) {
        err << "error: --n-max must be at least 2\n";
        return kUsage;
      }
      verify.problem = problem;
      return run_verify(verify, make_table(1), out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int run_verify(const VerifyConfig& config, const AlgorithmTable& table,
               std::ostream& out, std::ostream& diag) {
  const NamedAlgorithm& algo4 = find_algorithm(table, "algo4");
  const NamedAlgorithm& floyd = find_algorithm(table, "floyd");
  const NamedAlgorithm& mst_path = find_algorithm(table, "mst-path");
  const Problem problem = config.problem;

  for (std::size_t seed = 0; seed < config.seeds; ++seed) {
    const std::size_t n = 2 + seed % (config.n_max - 1);
    const DenseGraph graph = complete_graph_from_points(
        generate_random_points(n, 2, seed));

    const DistanceMatrix reference = floyd.run(graph, problem, Deadline{});
    std::optional<Failure> failure;
    if (!failure) failure = compare(reference, algo4.run(graph, problem, Deadline{}), "floyd", "algo4");
    if (!failure) failure = compare(reference, mst_path.run(graph, problem, Deadline{}), "floyd", "mst-path");
    if (!failure && n <= kBruteForceMaxVertices) {
      failure = compare(reference, brute_force_appd(graph, problem), "floyd", "brute-force");
    }
    if (!failure) {
      const auto instrumented = appd_calc_copy_instrumented(graph, problem);
      const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
      if (instrumented.stats.pair_writes != pairs) {
        failure = Failure{"algo4 wrote " + std::to_string(instrumented.stats.pair_writes) +
                          " pairs, expected " + std::to_string(pairs)};
      }
    }
    if (!failure) failure = check_invariants(graph, algo4.run(graph, problem, Deadline{}), "algo4");

    if (failure) {
      diag << "verify failed: seed " << seed << ", n " << n << ", problem "
           << to_string(problem) << ": " << failure->what << '\n'
           << "graph (matrix-csv):\n";
      write_matrix_csv(diag, graph);
      return kMismatch;
    }
  }
  out << "verified " << config.seeds << " seeds, n <= " << config.n_max
      << ", problem " << to_string(problem) << ": all algorithms agree\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const AlgorithmTable& table) {
  return run_impl(args, out, err, [&table](unsigned) { return table; });
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return run_impl(args, out, err,
                  [](unsigned workers) { return default_algorithms(workers); });
}

}  // namespace appd::cli
