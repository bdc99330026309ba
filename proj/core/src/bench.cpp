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

#include "appd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "appd/baselines.hpp"
#include "appd/calc_copy.hpp"
#include "appd/checksum.hpp"
#include "appd/csv_io.hpp"
#include "appd/random_points.hpp"

namespace appd {

AlgorithmTable default_algorithms(unsigned workers) {
  AlgorithmTable table;
  table.push_back({"algo4", [workers](const DenseGraph& g, Problem p,
                                      const Deadline& d) {
                     return appd_calc_copy(g, p, {.workers = workers, .deadline = &d});
                   }});
  table.push_back({"floyd", [](const DenseGraph& g, Problem p, const Deadline& d) {
                     return appd_floyd(g, p, {.deadline = &d});
                   }});
  table.push_back({"mst-path", [](const DenseGraph& g, Problem p,
                                  const Deadline& d) {
                     return appd_mst_path(g, p, &d);
                   }});
  return table;
}

const NamedAlgorithm& find_algorithm(const AlgorithmTable& table,
                                     std::string_view name) {
  for (const auto& entry : table) {
    if (entry.name == name) return entry;
  }
  std::string known;
  for (const auto& entry : table) {
    if (!known.empty()) known += ", ";
    known += entry.name;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) +
                        "' (known: " + known + ")");
}

void BenchConfig::validate() const {
  if (sizes.empty()) throw InvalidArgument("no benchmark sizes given");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < 2) throw InvalidArgument("benchmark sizes must be >= 2");
    if (k > 0 && sizes[k] <= sizes[k - 1]) {
      throw InvalidArgument("benchmark sizes must be strictly increasing");
    }
  }
  if (dimension == 0) throw InvalidArgument("dimension must be >= 1");
  if (!(timeout_seconds > 0.0)) throw InvalidArgument("timeout must be > 0");
  if (repetitions == 0) throw InvalidArgument("repetitions must be >= 1");
  if (algorithms.empty()) throw InvalidArgument("no algorithms selected");
}

std::vector<std::size_t> default_bench_sizes() {
  return {500, 1000, 2000, 4000, 8000, 10000};
}

BenchReport run_benchmark(const BenchConfig& config,
                          const AlgorithmTable& table) {
  return run_benchmark(config, table, [&config](std::size_t n) {
    return complete_graph_from_points(
        generate_random_points(n, config.dimension, config.seed));
  });
}

BenchReport run_benchmark(const BenchConfig& config,
                          const AlgorithmTable& table,
                          const GraphSource& source) {
  config.validate();
  std::vector<const NamedAlgorithm*> selected;
  for (const auto& name : config.algorithms) {
    selected.push_back(&find_algorithm(table, name));
  }
  std::vector<bool> gave_up(selected.size(), false);

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  for (std::size_t n : config.sizes) {
    const bool any_live =
        std::find(gave_up.begin(), gave_up.end(), false) != gave_up.end();
    std::optional<DenseGraph> graph;
    if (any_live) graph.emplace(source(n));

    const std::size_t first_row = report.rows.size();
    for (std::size_t a = 0; a < selected.size(); ++a) {
      BenchRow row{selected[a]->name, config.problem, n, config.seed,
                   RunStatus::timeout, std::nullopt, std::nullopt};
      if (!gave_up[a]) {
        for (unsigned rep = 0; rep < config.repetitions; ++rep) {
          const Deadline deadline =
              Deadline::after(std::chrono::duration<double>(config.timeout_seconds));
          try {
            const auto start = Clock::now();
            DistanceMatrix result = selected[a]->run(*graph, config.problem, deadline);
            const double wall =
                std::chrono::duration<double>(Clock::now() - start).count();
            row.status = RunStatus::ok;
            row.wall_seconds = row.wall_seconds ? std::min(*row.wall_seconds, wall) : wall;
            row.checksum = checksum(result);
          } catch (const TimeoutExpired&) {
            row = BenchRow{selected[a]->name, config.problem, n, config.seed,
                           RunStatus::timeout, std::nullopt, std::nullopt};
            gave_up[a] = true;
            break;
          }
        }
      }
      report.rows.push_back(std::move(row));
    }

    const BenchRow* reference = nullptr;
    for (std::size_t r = first_row; r < report.rows.size(); ++r) {
      const BenchRow& row = report.rows[r];
      if (row.status != RunStatus::ok) continue;
      if (reference == nullptr) {
        reference = &row;
      } else if (*row.checksum != *reference->checksum) {
        report.mismatches.push_back({n, reference->algorithm, row.algorithm});
      }
    }
  }
  return report;
}

ScalingFit estimate_scaling_exponent(const BenchReport& report,
                                     std::string_view algorithm) {
  std::vector<double> xs;
  std::vector<double> ys;
  ScalingFit fit;
  fit.algorithm = std::string(algorithm);
  for (const BenchRow& row : report.rows) {
    if (row.algorithm != algorithm || row.status != RunStatus::ok) continue;
    if (!row.wall_seconds || !(*row.wall_seconds > 0.0)) continue;
    xs.push_back(std::log(static_cast<double>(row.n)));
    ys.push_back(std::log(*row.wall_seconds));
    fit.min_n = xs.size() == 1 ? row.n : std::min(fit.min_n, row.n);
    fit.max_n = std::max(fit.max_n, row.n);
  }
  if (xs.size() < 3) {
    throw InvalidArgument("scaling fit for '" + fit.algorithm +
                          "' needs at least 3 completed rows, have " +
                          std::to_string(xs.size()));
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= m;
  my /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  if (sxx == 0.0) {
    throw InvalidArgument("scaling fit for '" + fit.algorithm +
                          "' needs at least two distinct sizes");
  }
  fit.points = xs.size();
  fit.exponent = sxy / sxx;
  return fit;
}

std::vector<ScalingFit> summarize(const BenchReport& report) {
  std::vector<std::string> names;
  for (const BenchRow& row : report.rows) {
    if (std::find(names.begin(), names.end(), row.algorithm) == names.end()) {
      names.push_back(row.algorithm);
    }
  }
  std::vector<ScalingFit> fits;
  for (const auto& name : names) {
    try {
      fits.push_back(estimate_scaling_exponent(report, name));
    } catch (const InvalidArgument&) {
      // too few completed rows
    }
  }
  return fits;
}

void write_report_csv(std::ostream& out, const BenchReport& report) {
  out << "algorithm,problem,n,seed,status,wall_seconds,checksum_hex\n";
  for (const BenchRow& row : report.rows) {
    out << row.algorithm << ',' << to_string(row.problem) << ',' << row.n << ','
        << row.seed << ',' << (row.status == RunStatus::ok ? "ok" : "timeout")
        << ',';
    if (row.wall_seconds) out << format_double(*row.wall_seconds);
    out << ',';
    if (row.checksum) out << checksum_hex(*row.checksum);
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<ScalingFit>& fits) {
  out << "algorithm,fit_min_n,fit_max_n,exponent\n";
  for (const ScalingFit& fit : fits) {
    out << fit.algorithm << ',' << fit.min_n << ',' << fit.max_n << ','
        << format_double(fit.exponent) << '\n';
  }
}

}  // namespace appd
