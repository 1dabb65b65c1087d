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

#include "matchwalk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "matchwalk/errors.hpp"

namespace matchwalk {

json graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"num_qubits", g.num_qubits()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const json& j) {
  const int n = j.at("num_qubits").get<int>();
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph edge must be a [u, v] pair");
    }
    edges.push_back({e[0].get<Label>(), e[1].get<Label>()});
  }
  return LabeledGraph(n, std::move(edges));
}

std::string graph_to_edgelist(const LabeledGraph& g) {
  std::ostringstream out;
  out << "#qubits " << g.num_qubits() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

LabeledGraph graph_from_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string key;
      h >> key;
      if (key == "qubits") {
        if (!(h >> n)) {
          throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                      ": bad #qubits header");
        }
      }
      continue;
    }
    std::istringstream row(line);
    Label u = 0;
    Label v = 0;
    if (!(row >> u >> v)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    }
    edges.push_back({u, v});
  }
  if (n < 0) throw std::invalid_argument("edge list has no #qubits header");
  return LabeledGraph(n, std::move(edges));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

LabeledGraph read_graph(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    if (path.extension() == ".json") return graph_from_json(json::parse(text));
    return graph_from_edgelist(text);
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_graph(const LabeledGraph& g, const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    write_text_file(path, graph_to_json(g).dump() + "\n");
  } else {
    write_text_file(path, graph_to_edgelist(g));
  }
}

json compressed_matching_to_json(const std::vector<CompressedEdge>& edges) {
  json out = json::array();
  for (const CompressedEdge& e : edges) {
    out.push_back({{"u", e.u},
                   {"v", e.v},
                   {"active", e.active},
                   {"weight_reducing", e.weight_reducing},
                   {"mask", e.mask}});
  }
  return out;
}

std::vector<CompressedEdge> compressed_matching_from_json(const json& j) {
  std::vector<CompressedEdge> out;
  for (const json& r : j) {
    CompressedEdge e;
    e.u = r.at("u").get<Label>();
    e.v = r.at("v").get<Label>();
    e.active = r.at("active").get<std::vector<int>>();
    e.weight_reducing = r.at("weight_reducing").get<std::vector<int>>();
    e.mask = r.at("mask").get<Label>();
    out.push_back(std::move(e));
  }
  return out;
}

json circuit_to_json(const GateCircuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    json controls = json::array();
    for (const Control& ctl : g.controls) controls.push_back({ctl.qubit, ctl.value ? 1 : 0});
    gates.push_back({{"kind", std::string(to_string(g.kind))},
                     {"target", g.target},
                     {"controls", std::move(controls)},
                     {"angle", g.angle}});
  }
  return gates;
}

GateCircuit circuit_from_json(const json& j, int num_qubits) {
  GateCircuit c(num_qubits);
  for (const json& r : j) {
    Gate g;
    g.kind = parse_gate_kind(r.at("kind").get<std::string>());
    g.target = r.at("target").get<int>();
    for (const json& ctl : r.value("controls", json::array())) {
      g.controls.push_back({ctl.at(0).get<int>(), ctl.at(1).get<int>() != 0});
    }
    g.angle = r.value("angle", 0.0);
    c.append(std::move(g));
  }
  return c;
}

json operator_to_json(const DenseOperator& op) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < op.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < op.cols(); ++c) {
      row.push_back({op(r, c).real(), op(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json witness_to_json(const std::string& graph_id, const WitnessReport& report) {
  json terms = json::array();
  for (const PauliTerm& t : report.witness_terms) {
    terms.push_back({{"word", t.word}, {"coefficient", t.coefficient}});
  }
  return {{"graph_id", graph_id},
          {"commuting_matching_found", report.commuting_matching_found},
          {"pauli_noncommuting", report.pauli_noncommuting},
          {"witness_terms", std::move(terms)}};
}

}  // namespace matchwalk
