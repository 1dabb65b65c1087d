// Copyright 2026 The matchwalk Authors
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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "matchwalk/compilers.hpp"
#include "matchwalk/datasets.hpp"
#include "matchwalk/graph.hpp"

namespace matchwalk {

enum class Method { Matching, Pauli };

std::string_view to_string(Method m);
/// "matching" or "pauli"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// Output of the full pipeline for one graph: the circuit as built by the
/// compiler (with MCRX gates for the matching method) and the lowered,
/// peephole-optimized circuit that is counted and simulated.
struct CompiledGraph {
  GateCircuit raw;
  GateCircuit optimized;
  std::size_t num_terms = 0;  // matchings or Pauli terms
};

CompiledGraph compile_graph(const LabeledGraph& g, Method method,
                            const TrotterPlan& plan,
                            const DecomposeOptions& options = {});

/// ||exp(-i t A) - U||_2, where U is the N-th power of the unitary of the
/// optimized one-step circuit at time t / N.
double trotter_error(const LabeledGraph& g, Method method, double t, int steps,
                     const DecomposeOptions& options = {});

struct BenchRecord {
  std::string graph_id;
  std::string dataset;
  std::uint64_t num_vertices = 0;
  Method method = Method::Matching;
  double t = 0.0;
  int trotter_steps = 1;
  std::size_t cx_count = 0;
  std::size_t depth = 0;
  std::optional<double> error_2norm;
  std::uint64_t seed = 0;
  std::int64_t wall_time_ms = 0;
};

/// A graph together with its identity inside a dataset.
struct GraphInstance {
  std::string graph_id;
  std::string dataset;
  LabeledGraph graph;
  std::uint64_t seed = 0;
};

std::vector<GraphInstance> make_instances(const DatasetSpec& spec);

struct CompareOptions {
  std::vector<double> times{1.0};
  std::vector<int> steps{1};
  std::vector<Method> methods{Method::Matching, Method::Pauli};
  bool compute_error = true;
  /// Extra decomposition runs with scan seeds 1..repeat-1 (repeat 1 = the
  /// deterministic sorted order only).
  int repeat = 1;
  unsigned threads = 1;
};

/// One record per (graph, method, t, N, repeat), sorted by graph_id and then
/// by (method, t, N, repeat).
std::vector<BenchRecord> run_compare(const std::vector<GraphInstance>& graphs,
                                     const CompareOptions& options);

struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  double cv = 0.0;      // stddev / mean, 0 when mean == 0
};

Stats summarize(std::span<const double> values);

struct SummaryRow {
  std::string dataset;
  std::uint64_t num_vertices = 0;
  Method method = Method::Matching;
  double t = 0.0;
  int trotter_steps = 1;
  std::string metric;  // "cx_count", "depth" or "error_2norm"
  Stats stats;
};

/// Aggregates records per (dataset, vertices, method, t, N) cell.
std::vector<SummaryRow> summarize_records(const std::vector<BenchRecord>& records);

/// Versioned CSV. The first line is kCsvSchemaLine, the second the header.
inline constexpr std::string_view kCsvSchemaLine = "# matchwalk-bench-records v1";
std::string records_to_csv(const std::vector<BenchRecord>& records);
/// Throws std::invalid_argument naming the 1-based line of the first bad row.
std::vector<BenchRecord> records_from_csv(const std::string& text);
nlohmann::json records_to_json(const std::vector<BenchRecord>& records);

std::string summary_to_csv(const std::vector<SummaryRow>& rows);

/// Writes graph_XXXX.json files and manifest.json into `dir`; returns the
/// manifest.
nlohmann::json write_dataset(const DatasetSpec& spec,
                             const std::filesystem::path& dir);
/// Reads a directory written by write_dataset.
std::vector<GraphInstance> read_dataset(const std::filesystem::path& dir);

/// Plot-ready tables derived from bench records.
struct ReportTables {
  std::string error_vs_steps;    // dataset, vertices, method, t, N -> error
  std::string gates_vs_vertices; // dataset, method, t, N, vertices -> cx/depth
  std::size_t error_points = 0;
  std::size_t gate_points = 0;
};

ReportTables build_report(const std::vector<BenchRecord>& records);

}  // namespace matchwalk
