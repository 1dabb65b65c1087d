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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchwalk/bench.hpp"
#include "matchwalk/commuting.hpp"
#include "matchwalk/errors.hpp"
#include "matchwalk/io.hpp"

namespace py = pybind11;
using namespace matchwalk;

namespace {

using EdgeList = std::vector<std::pair<Label, Label>>;

std::vector<Edge> to_edges(const EdgeList& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

EdgeList from_edges(const std::vector<Edge>& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict compressed_dict(const CompressedEdge& e) {
  py::dict d;
  d["u"] = e.u;
  d["v"] = e.v;
  d["active"] = e.active;
  d["weight_reducing"] = e.weight_reducing;
  d["mask"] = e.mask;
  return d;
}

Matching to_matching(const EdgeList& pairs) { return Matching{to_edges(pairs)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum walk circuits by matching decomposition";

  py::register_exception<NumericalGuardError>(m, "NumericalGuardError");
  py::register_exception<IoError>(m, "IoError");

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def(py::init([](int n, const EdgeList& edges) {
             return LabeledGraph(n, to_edges(edges));
           }),
           py::arg("num_qubits"), py::arg("edges"))
      .def_property_readonly("num_qubits", &LabeledGraph::num_qubits)
      .def_property_readonly("num_vertices", &LabeledGraph::num_vertices)
      .def_property_readonly("num_edges", &LabeledGraph::num_edges)
      .def_property_readonly("edges",
                             [](const LabeledGraph& g) { return from_edges(g.edges()); })
      .def("has_edge", &LabeledGraph::has_edge)
      .def("is_connected", &LabeledGraph::is_connected)
      .def("max_degree", &LabeledGraph::max_degree)
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__repr__", [](const LabeledGraph& g) {
        return "LabeledGraph(num_qubits=" + std::to_string(g.num_qubits()) +
               ", num_edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("hamming_distance",
        py::overload_cast<Label, Label>(&hamming_distance), py::arg("u"), py::arg("v"));
  m.def("hamming_distance_str",
        py::overload_cast<std::string_view, std::string_view>(&hamming_distance),
        py::arg("u"), py::arg("v"));
  m.def("adjacency_matrix",
        py::overload_cast<const LabeledGraph&>(&adjacency_matrix), py::arg("graph"));
  m.def("gen_hypercube", &gen_hypercube, py::arg("n"));
  m.def(
      "generate_dataset",
      [](const std::string& kind, std::uint64_t vertices, double prob,
         std::uint64_t seed, std::size_t count) {
        return generate_dataset(
            DatasetSpec{parse_dataset_kind(kind), vertices, prob, seed, count});
      },
      py::arg("kind"), py::arg("num_vertices"), py::arg("edge_probability") = 0.0,
      py::arg("seed") = 0, py::arg("count") = 1);
  m.def("read_graph", [](const std::string& p) { return read_graph(p); });
  m.def("write_graph",
        [](const LabeledGraph& g, const std::string& p) { write_graph(g, p); });

  m.def(
      "greedy_matching_decompose",
      [](const LabeledGraph& g, std::optional<std::uint64_t> scan_seed) {
        std::vector<EdgeList> out;
        for (const Matching& mt : greedy_matching_decompose(g, {scan_seed})) {
          out.push_back(from_edges(mt.edges));
        }
        return out;
      },
      py::arg("graph"), py::arg("scan_seed") = py::none());
  m.def(
      "compress_matching",
      [](const EdgeList& matching, int n) {
        py::list out;
        for (const CompressedEdge& e : compress_matching(to_matching(matching), n)) {
          out.append(compressed_dict(e));
        }
        return out;
      },
      py::arg("matching"), py::arg("num_qubits"));
  m.def(
      "matching_unitary",
      [](const EdgeList& matching, double t, int n) {
        return circuit_unitary(matching_circuit(to_matching(matching), t, n));
      },
      py::arg("matching"), py::arg("t"), py::arg("num_qubits"),
      "Unitary of the compressed three-stage circuit for one matching.");

  m.def(
      "compile",
      [](const LabeledGraph& g, const std::string& method, double t, int steps) {
        const CompiledGraph cg =
            compile_graph(g, parse_method(method), TrotterPlan{t, steps, {}});
        py::dict d;
        d["num_terms"] = cg.num_terms;
        d["cx_count"] = cx_count(cg.optimized);
        d["depth"] = depth(cg.optimized);
        d["num_gates"] = cg.optimized.size();
        d["circuit_json"] = circuit_to_json(cg.optimized).dump();
        return d;
      },
      py::arg("graph"), py::arg("method") = "matching", py::arg("t") = 1.0,
      py::arg("steps") = 1);
  m.def(
      "compiled_unitary",
      [](const LabeledGraph& g, const std::string& method, double t, int steps) {
        return circuit_unitary(
            compile_graph(g, parse_method(method), TrotterPlan{t, steps, {}})
                .optimized);
      },
      py::arg("graph"), py::arg("method") = "matching", py::arg("t") = 1.0,
      py::arg("steps") = 1);

  m.def(
      "pauli_decompose",
      [](const LabeledGraph& g) {
        std::vector<std::pair<std::string, double>> out;
        for (const PauliTerm& t : pauli_decompose(adjacency_matrix(g), g.num_qubits())) {
          out.emplace_back(t.word, t.coefficient);
        }
        return out;
      },
      py::arg("graph"));
  m.def("anticommute", &anticommute, py::arg("a"), py::arg("b"));

  m.def("exact_evolution", &exact_evolution, py::arg("a"), py::arg("t"));
  m.def("spectral_norm_diff", &spectral_norm_diff, py::arg("a"), py::arg("b"));
  m.def(
      "trotter_error",
      [](const LabeledGraph& g, const std::string& method, double t, int steps) {
        return trotter_error(g, parse_method(method), t, steps);
      },
      py::arg("graph"), py::arg("method"), py::arg("t"), py::arg("steps"));

  m.def(
      "modular_times3_perm",
      [](int n) { return modular_times3_perm(n).mapping(); }, py::arg("n"));
  m.def(
      "local_block_perm",
      [](int n, int block) { return local_block_perm(n, block).mapping(); },
      py::arg("n"), py::arg("block"));
  m.def(
      "relabel_graph",
      [](const LabeledGraph& g, std::vector<Label> mapping) {
        return relabel_graph(g, VertexPermutation(g.num_qubits(), std::move(mapping)));
      },
      py::arg("graph"), py::arg("mapping"));
  m.def(
      "matchings_commute",
      [](const EdgeList& a, const EdgeList& b, int n) {
        return classify_matching_union(to_matching(a), to_matching(b), n).commutes();
      },
      py::arg("a"), py::arg("b"), py::arg("num_qubits"));
  m.def(
      "relabeled_hypercube_witness",
      [](std::vector<Label> mapping) {
        const auto n = std::countr_zero(mapping.size());
        const WitnessReport r =
            relabeled_hypercube_witness(VertexPermutation(n, std::move(mapping)));
        return py::make_tuple(r.commuting_matching_found, r.pauli_noncommuting);
      },
      py::arg("mapping"));
}
