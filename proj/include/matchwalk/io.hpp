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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "matchwalk/circuit.hpp"
#include "matchwalk/commuting.hpp"
#include "matchwalk/graph.hpp"
#include "matchwalk/matching.hpp"

namespace matchwalk {

using nlohmann::json;

// Graphs: {"num_qubits": n, "edges": [[u, v], ...]}
json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j);

// Graphs as text: a "#qubits n" header, then one "u v" pair per line. Blank
// lines and other '#' lines are ignored.
std::string graph_to_edgelist(const LabeledGraph& g);
LabeledGraph graph_from_edgelist(const std::string& text);

/// Reads either format; ".json" files are parsed as JSON, anything else as an
/// edge list. Throws IoError naming the path.
LabeledGraph read_graph(const std::filesystem::path& path);
void write_graph(const LabeledGraph& g, const std::filesystem::path& path);

// Compressed matchings: one array of
// {"u", "v", "active", "weight_reducing", "mask"} records per matching.
json compressed_matching_to_json(const std::vector<CompressedEdge>& edges);
std::vector<CompressedEdge> compressed_matching_from_json(const json& j);

// Circuits: a list of {"kind", "target", "controls": [[q, val], ...], "angle"}.
json circuit_to_json(const GateCircuit& c);
GateCircuit circuit_from_json(const json& j, int num_qubits);

/// Operator as nested [re, im] pairs, row-major.
json operator_to_json(const DenseOperator& op);

json witness_to_json(const std::string& graph_id, const WitnessReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace matchwalk
