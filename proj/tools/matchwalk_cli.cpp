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

// Command-line driver: generate, decompose, compile, simulate, compare, report.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 numerical guard.

#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "matchwalk/bench.hpp"
#include "matchwalk/errors.hpp"
#include "matchwalk/io.hpp"

namespace fs = std::filesystem;
using namespace matchwalk;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitGuard = 3;

struct DatasetFlags {
  std::string dataset = "connected-path";
  std::uint64_t vertices = 8;
  double prob = 0.0;
  std::size_t count = 1;
  std::uint64_t seed = 0;

  DatasetSpec spec() const {
    return {parse_dataset_kind(dataset), vertices, prob, seed, count};
  }
};

void add_dataset_flags(CLI::App* cmd, DatasetFlags& f) {
  cmd->add_option("--dataset", f.dataset,
                  "connected-path, erdos-renyi or hypercube")
      ->capture_default_str();
  cmd->add_option("--vertices", f.vertices, "vertex count (power of two)")
      ->capture_default_str();
  cmd->add_option("--prob", f.prob, "edge probability (erdos-renyi)")
      ->capture_default_str();
  cmd->add_option("--count", f.count, "number of graphs")->capture_default_str();
  cmd->add_option("--seed", f.seed, "dataset seed")->capture_default_str();
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::vector<Method> parse_methods(const std::string& name) {
  if (name == "both") return {Method::Matching, Method::Pauli};
  return {parse_method(name)};
}

json matching_json(const Matching& m, int n) {
  json edges = json::array();
  for (const Edge& e : m.edges) edges.push_back({e.u, e.v});
  return {{"edges", std::move(edges)},
          {"compressed", compressed_matching_to_json(compress_matching(m, n))}};
}

// Builds the compare inputs from --in (dataset dir or single graph file) or
// from the dataset flags.
std::vector<GraphInstance> load_instances(const std::string& in,
                                          const DatasetFlags& flags) {
  if (in.empty()) return make_instances(flags.spec());
  const fs::path p(in);
  if (fs::is_directory(p)) return read_dataset(p);
  return {GraphInstance{p.stem().string(), p.stem().string(), read_graph(p), 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchwalk: quantum walk circuits by matching decomposition"};
  app.require_subcommand(1);

  // generate
  DatasetFlags gen_flags;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a seeded graph dataset");
  add_dataset_flags(generate, gen_flags);
  generate->add_option("--out", gen_out, "output directory")->required();

  // decompose
  std::string dec_in;
  std::string dec_out;
  std::uint64_t dec_scan_seed = 0;
  auto* decompose =
      app.add_subcommand("decompose", "greedy matchings and their compression");
  decompose->add_option("--in", dec_in, "graph file (.json or edge list)")->required();
  decompose->add_option("--out", dec_out, "output JSON (default stdout)");
  decompose->add_option("--scan-seed", dec_scan_seed,
                        "shuffle multi-bit edges with this seed (0 = sorted)");

  // compile
  std::string cmp_in;
  std::string cmp_out;
  std::string cmp_method = "matching";
  double cmp_t = 1.0;
  int cmp_steps = 1;
  bool cmp_raw = false;
  auto* compile = app.add_subcommand("compile", "compile a Trotterized circuit");
  compile->add_option("--in", cmp_in, "graph file")->required();
  compile->add_option("--out", cmp_out, "output JSON (default stdout)");
  compile->add_option("--method", cmp_method, "matching or pauli")->capture_default_str();
  compile->add_option("--t", cmp_t, "evolution time")->capture_default_str();
  compile->add_option("--steps", cmp_steps, "Trotter steps")->capture_default_str();
  compile->add_flag("--raw", cmp_raw, "emit the circuit before lowering/optimization");

  // simulate
  std::string sim_in;
  std::string sim_out;
  std::string sim_method = "both";
  std::vector<double> sim_t{1.0};
  std::vector<int> sim_steps{1};
  auto* simulate =
      app.add_subcommand("simulate", "Trotter error against exact evolution");
  simulate->add_option("--in", sim_in, "graph file")->required();
  simulate->add_option("--out", sim_out, "output JSON (default stdout)");
  simulate->add_option("--method", sim_method, "matching, pauli or both")
      ->capture_default_str();
  simulate->add_option("--t", sim_t, "evolution time (repeatable)");
  simulate->add_option("--steps", sim_steps, "Trotter steps (repeatable)");

  // compare
  DatasetFlags cmpr_flags;
  std::string cmpr_in;
  std::string cmpr_out;
  std::string cmpr_method = "both";
  std::string cmpr_format = "csv";
  CompareOptions cmpr_opts;
  bool cmpr_no_error = false;
  auto* compare = app.add_subcommand("compare", "benchmark both compilers");
  add_dataset_flags(compare, cmpr_flags);
  compare->add_option("--in", cmpr_in,
                      "dataset directory or graph file (default: generate)");
  compare->add_option("--out", cmpr_out, "records file (default stdout)");
  compare->add_option("--method", cmpr_method, "matching, pauli or both")
      ->capture_default_str();
  compare->add_option("--t", cmpr_opts.times, "evolution time (repeatable)");
  compare->add_option("--steps", cmpr_opts.steps, "Trotter steps (repeatable)");
  compare->add_option("--format", cmpr_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  compare->add_option("--repeat", cmpr_opts.repeat,
                      "decomposition runs per cell with varied scan seeds")
      ->check(CLI::PositiveNumber);
  compare->add_option("--threads", cmpr_opts.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  compare->add_flag("--no-error", cmpr_no_error, "skip dense error computation");

  // report
  std::string rep_in;
  std::string rep_out;
  auto* report = app.add_subcommand("report", "plot-ready tables from records CSV");
  report->add_option("--in", rep_in, "records CSV")->required();
  report->add_option("--out", rep_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      const json manifest = write_dataset(gen_flags.spec(), gen_out);
      std::cerr << "wrote " << manifest.at("graphs").size() << " graphs to "
                << gen_out << " (mean edges " << manifest.at("mean_edges").get<double>()
                << ")\n";
    } else if (*decompose) {
      const LabeledGraph g = read_graph(dec_in);
      DecomposeOptions opt;
      if (dec_scan_seed != 0) opt.scan_seed = dec_scan_seed;
      json matchings = json::array();
      for (const Matching& m : greedy_matching_decompose(g, opt)) {
        matchings.push_back(matching_json(m, g.num_qubits()));
      }
      const json out = {{"num_qubits", g.num_qubits()},
                        {"num_edges", g.num_edges()},
                        {"matchings", std::move(matchings)}};
      emit(dec_out, out.dump(2) + "\n");
    } else if (*compile) {
      const LabeledGraph g = read_graph(cmp_in);
      const Method method = parse_method(cmp_method);
      const CompiledGraph cg =
          compile_graph(g, method, TrotterPlan{cmp_t, cmp_steps, {}});
      const GateCircuit& c = cmp_raw ? cg.raw : cg.optimized;
      json out = {{"num_qubits", g.num_qubits()},
                  {"method", std::string(to_string(method))},
                  {"t", cmp_t},
                  {"trotter_steps", cmp_steps},
                  {"num_terms", cg.num_terms},
                  {"global_phase", c.global_phase()},
                  {"gates", circuit_to_json(c)}};
      if (c.is_lowered()) {
        out["cx_count"] = cx_count(c);
        out["depth"] = depth(c);
      }
      emit(cmp_out, out.dump(2) + "\n");
    } else if (*simulate) {
      const LabeledGraph g = read_graph(sim_in);
      json rows = json::array();
      for (Method method : parse_methods(sim_method)) {
        for (double t : sim_t) {
          for (int steps : sim_steps) {
            rows.push_back({{"method", std::string(to_string(method))},
                            {"t", t},
                            {"trotter_steps", steps},
                            {"error_2norm", trotter_error(g, method, t, steps)}});
          }
        }
      }
      emit(sim_out, rows.dump(2) + "\n");
    } else if (*compare) {
      cmpr_opts.methods = parse_methods(cmpr_method);
      cmpr_opts.compute_error = !cmpr_no_error;
      const auto records = run_compare(load_instances(cmpr_in, cmpr_flags), cmpr_opts);
      if (cmpr_format == "json") {
        emit(cmpr_out, records_to_json(records).dump(2) + "\n");
      } else {
        emit(cmpr_out, records_to_csv(records));
      }
      const std::string summary = summary_to_csv(summarize_records(records));
      if (cmpr_out.empty() || cmpr_out == "-") {
        std::cerr << summary;
      } else {
        fs::path sp(cmpr_out);
        sp.replace_filename(sp.stem().string() + "_summary.csv");
        write_text_file(sp, summary);
      }
    } else if (*report) {
      const auto records = records_from_csv(read_text_file(rep_in));
      if (records.empty()) {
        std::cerr << "warning: " << rep_in << " holds no records\n";
      }
      std::error_code ec;
      fs::create_directories(rep_out, ec);
      if (ec) throw IoError("cannot create directory " + rep_out + ": " + ec.message());
      const ReportTables tables = build_report(records);
      write_text_file(fs::path(rep_out) / "error_vs_steps.csv", tables.error_vs_steps);
      write_text_file(fs::path(rep_out) / "gates_vs_vertices.csv",
                      tables.gates_vs_vertices);
      std::cerr << "error points " << tables.error_points << ", gate points "
                << tables.gate_points << "\n";
    }
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalGuardError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
