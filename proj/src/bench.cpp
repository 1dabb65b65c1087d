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

#include "matchwalk/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "matchwalk/errors.hpp"
#include "matchwalk/io.hpp"

namespace matchwalk {

std::string_view to_string(Method m) {
  return m == Method::Matching ? "matching" : "pauli";
}

Method parse_method(std::string_view name) {
  if (name == "matching") return Method::Matching;
  if (name == "pauli") return Method::Pauli;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

CompiledGraph compile_graph(const LabeledGraph& g, Method method,
                            const TrotterPlan& plan,
                            const DecomposeOptions& options) {
  CompiledGraph out;
  if (method == Method::Matching) {
    out.num_terms = greedy_matching_decompose(g, options).size();
    out.raw = compile_matching_trotter(g, plan, options);
  } else {
    const auto terms = pauli_decompose(adjacency_matrix(g), g.num_qubits());
    out.num_terms = terms.size();
    if (terms.empty()) {
      out.raw = GateCircuit(g.num_qubits());
    } else {
      out.raw = compile_pauli_trotter(terms, plan, g.num_qubits());
    }
  }
  out.optimized = peephole_optimize(lower_circuit(out.raw));
  return out;
}

double trotter_error(const LabeledGraph& g, Method method, double t, int steps,
                     const DecomposeOptions& options) {
  if (steps < 1) throw std::invalid_argument("trotter_error: steps must be >= 1");
  check_dense_qubits(g.num_qubits());
  const TrotterPlan one_step{t / static_cast<double>(steps), 1, {}};
  const CompiledGraph step = compile_graph(g, method, one_step, options);
  const DenseOperator approx =
      matrix_power(circuit_unitary(step.optimized), static_cast<std::uint64_t>(steps));
  const DenseOperator exact = exact_evolution(adjacency_matrix(g), t);
  return spectral_norm_diff(exact, approx);
}

std::vector<GraphInstance> make_instances(const DatasetSpec& spec) {
  const auto graphs = generate_dataset(spec);
  const std::string dataset =
      std::string(to_string(spec.kind)) + "-" + std::to_string(spec.num_vertices);
  std::vector<GraphInstance> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    char id[64];
    std::snprintf(id, sizeof(id), "%s-%04zu", dataset.c_str(), i);
    out.push_back({id, dataset, graphs[i], instance_seed(spec.seed, i)});
  }
  return out;
}

namespace {

std::vector<BenchRecord> records_for_graph(const GraphInstance& inst,
                                           const CompareOptions& options) {
  std::vector<BenchRecord> out;
  const bool simulable =
      options.compute_error && inst.graph.num_qubits() <= kMaxDenseQubits;
  for (Method method : options.methods) {
    for (double t : options.times) {
      for (int steps : options.steps) {
        for (int rep = 0; rep < std::max(1, options.repeat); ++rep) {
          DecomposeOptions dopt;
          if (rep > 0) dopt.scan_seed = static_cast<std::uint64_t>(rep);
          const auto start = std::chrono::steady_clock::now();
          const CompiledGraph cg =
              compile_graph(inst.graph, method, TrotterPlan{t, steps, {}}, dopt);
          const auto stop = std::chrono::steady_clock::now();
          BenchRecord r;
          r.graph_id = inst.graph_id;
          r.dataset = inst.dataset;
          r.num_vertices = inst.graph.num_vertices();
          r.method = method;
          r.t = t;
          r.trotter_steps = steps;
          r.cx_count = cx_count(cg.optimized);
          r.depth = depth(cg.optimized);
          if (simulable) r.error_2norm = trotter_error(inst.graph, method, t, steps, dopt);
          r.seed = inst.seed;
          r.wall_time_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_compare(const std::vector<GraphInstance>& graphs,
                                     const CompareOptions& options) {
  std::vector<std::vector<BenchRecord>> per_graph(graphs.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(graphs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      per_graph[i] = records_for_graph(graphs[i], options);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < graphs.size(); i = next++) {
            per_graph[i] = records_for_graph(graphs[i], options);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<std::size_t> order(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return graphs[a].graph_id < graphs[b].graph_id;
  });
  std::vector<BenchRecord> out;
  for (std::size_t i : order) {
    out.insert(out.end(), per_graph[i].begin(), per_graph[i].end());
  }
  return out;
}

Stats summarize(std::span<const double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  s.cv = s.mean > 0.0 ? s.stddev / s.mean : 0.0;
  return s;
}

std::vector<SummaryRow> summarize_records(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::string, std::uint64_t, int, double, int>;
  struct Cell {
    std::vector<double> cx, depth, error;
  };
  std::map<Key, Cell> cells;
  for (const BenchRecord& r : records) {
    Cell& c = cells[{r.dataset, r.num_vertices, static_cast<int>(r.method), r.t,
                     r.trotter_steps}];
    c.cx.push_back(static_cast<double>(r.cx_count));
    c.depth.push_back(static_cast<double>(r.depth));
    if (r.error_2norm) c.error.push_back(*r.error_2norm);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, cell] : cells) {
    const auto& [dataset, vertices, method, t, steps] = key;
    auto add = [&](const char* metric, const std::vector<double>& v) {
      if (v.empty()) return;
      rows.push_back({dataset, vertices, static_cast<Method>(method), t, steps,
                      metric, summarize(v)});
    };
    add("cx_count", cell.cx);
    add("depth", cell.depth);
    add("error_2norm", cell.error);
  }
  return rows;
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

constexpr std::string_view kRecordHeader =
    "graph_id,dataset,num_vertices,method,t,trotter_steps,cx_count,depth,"
    "error_2norm,seed,wall_time_ms";

}  // namespace

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvSchemaLine << '\n' << kRecordHeader << '\n';
  for (const BenchRecord& r : records) {
    if (r.graph_id.find(',') != std::string::npos ||
        r.dataset.find(',') != std::string::npos) {
      throw std::invalid_argument("records_to_csv: identifiers cannot contain ','");
    }
    out << r.graph_id << ',' << r.dataset << ',' << r.num_vertices << ','
        << to_string(r.method) << ',' << fmt_double(r.t) << ',' << r.trotter_steps
        << ',' << r.cx_count << ',' << r.depth << ','
        << (r.error_2norm ? fmt_double(*r.error_2norm) : std::string()) << ','
        << r.seed << ',' << r.wall_time_ms << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BenchRecord> out;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kRecordHeader) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": unexpected CSV header");
      }
      header_seen = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 11) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 11 fields, got " +
                                  std::to_string(f.size()));
    }
    try {
      BenchRecord r;
      std::size_t pos = 0;
      auto whole = [&](const std::string& s, auto value) {
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return value;
      };
      r.graph_id = f[0];
      r.dataset = f[1];
      r.num_vertices = whole(f[2], std::stoull(f[2], &pos));
      r.method = parse_method(f[3]);
      r.t = whole(f[4], std::stod(f[4], &pos));
      r.trotter_steps = whole(f[5], std::stoi(f[5], &pos));
      r.cx_count = whole(f[6], std::stoull(f[6], &pos));
      r.depth = whole(f[7], std::stoull(f[7], &pos));
      if (!f[8].empty()) r.error_2norm = whole(f[8], std::stod(f[8], &pos));
      r.seed = whole(f[9], std::stoull(f[9], &pos));
      r.wall_time_ms = whole(f[10], std::stoll(f[10], &pos));
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

nlohmann::json records_to_json(const std::vector<BenchRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const BenchRecord& r : records) {
    nlohmann::json j = {{"graph_id", r.graph_id},
                        {"dataset", r.dataset},
                        {"num_vertices", r.num_vertices},
                        {"method", std::string(to_string(r.method))},
                        {"t", r.t},
                        {"trotter_steps", r.trotter_steps},
                        {"cx_count", r.cx_count},
                        {"depth", r.depth},
                        {"seed", r.seed},
                        {"wall_time_ms", r.wall_time_ms}};
    j["error_2norm"] = r.error_2norm ? nlohmann::json(*r.error_2norm) : nlohmann::json();
    out.push_back(std::move(j));
  }
  return out;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "# matchwalk-bench-summary v1\n"
      << "dataset,num_vertices,method,t,trotter_steps,metric,count,mean,std,cv\n";
  for (const SummaryRow& r : rows) {
    out << r.dataset << ',' << r.num_vertices << ',' << to_string(r.method) << ','
        << fmt_double(r.t) << ',' << r.trotter_steps << ',' << r.metric << ','
        << r.stats.count << ',' << fmt_double(r.stats.mean) << ','
        << fmt_double(r.stats.stddev) << ',' << fmt_double(r.stats.cv) << '\n';
  }
  return out.str();
}

nlohmann::json write_dataset(const DatasetSpec& spec,
                             const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());

  const auto instances = make_instances(spec);
  nlohmann::json graphs = nlohmann::json::array();
  std::vector<double> edge_counts;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "graph_%04zu.json", i);
    write_graph(instances[i].graph, dir / name);
    graphs.push_back({{"graph_id", instances[i].graph_id},
                      {"file", name},
                      {"seed", instances[i].seed},
                      {"num_edges", instances[i].graph.num_edges()}});
    edge_counts.push_back(static_cast<double>(instances[i].graph.num_edges()));
  }
  const Stats edges = summarize(edge_counts);
  nlohmann::json manifest = {
      {"dataset", std::string(to_string(spec.kind))},
      {"num_vertices", spec.num_vertices},
      {"edge_probability", spec.edge_probability},
      {"seed", spec.seed},
      {"count", spec.count},
      {"rng", "mt19937_64, per-graph seed splitmix64(seed, index)"},
      {"mean_edges", edges.mean},
      {"std_edges", edges.stddev},
      {"graphs", std::move(graphs)}};
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

std::vector<GraphInstance> read_dataset(const std::filesystem::path& dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
  } catch (const nlohmann::json::exception& e) {
    throw IoError((dir / "manifest.json").string() + ": " + e.what());
  }
  const std::string dataset = manifest.at("dataset").get<std::string>() + "-" +
                              std::to_string(manifest.at("num_vertices").get<std::uint64_t>());
  std::vector<GraphInstance> out;
  for (const auto& g : manifest.at("graphs")) {
    out.push_back({g.at("graph_id").get<std::string>(), dataset,
                   read_graph(dir / g.at("file").get<std::string>()),
                   g.at("seed").get<std::uint64_t>()});
  }
  return out;
}

ReportTables build_report(const std::vector<BenchRecord>& records) {
  ReportTables tables;
  const auto rows = summarize_records(records);

  std::ostringstream err;
  err << "dataset,num_vertices,method,t,steps,count,mean,std\n";
  for (const SummaryRow& r : rows) {
    if (r.metric != "error_2norm") continue;
    err << r.dataset << ',' << r.num_vertices << ',' << to_string(r.method) << ','
        << fmt_double(r.t) << ',' << r.trotter_steps << ',' << r.stats.count << ','
        << fmt_double(r.stats.mean) << ',' << fmt_double(r.stats.stddev) << '\n';
    ++tables.error_points;
  }
  tables.error_vs_steps = err.str();

  // Pair the cx and depth rows of each cell, ordered by vertex count.
  using Key = std::tuple<std::string, int, double, int, std::uint64_t>;
  std::map<Key, std::pair<Stats, Stats>> gates;
  for (const SummaryRow& r : rows) {
    // Strip the "-<vertices>" suffix so one family spans all sizes.
    std::string family = r.dataset;
    const auto dash = family.rfind('-');
    if (dash != std::string::npos &&
        family.substr(dash + 1) == std::to_string(r.num_vertices)) {
      family.resize(dash);
    }
    const Key key{family, static_cast<int>(r.method), r.t, r.trotter_steps,
                  r.num_vertices};
    if (r.metric == "cx_count") gates[key].first = r.stats;
    if (r.metric == "depth") gates[key].second = r.stats;
  }
  std::ostringstream gv;
  gv << "dataset,method,t,steps,num_vertices,count,cx_mean,cx_std,cx_cv,"
        "depth_mean,depth_std,depth_cv\n";
  for (const auto& [key, st] : gates) {
    const auto& [family, method, t, steps, vertices] = key;
    gv << family << ',' << to_string(static_cast<Method>(method)) << ','
       << fmt_double(t) << ',' << steps << ',' << vertices << ',' << st.first.count
       << ',' << fmt_double(st.first.mean) << ',' << fmt_double(st.first.stddev)
       << ',' << fmt_double(st.first.cv) << ',' << fmt_double(st.second.mean)
       << ',' << fmt_double(st.second.stddev) << ',' << fmt_double(st.second.cv)
       << '\n';
    ++tables.gate_points;
  }
  tables.gates_vs_vertices = gv.str();
  return tables;
}

}  // namespace matchwalk
