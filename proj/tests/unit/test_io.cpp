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

#include <filesystem>
#include <stdexcept>

#include "doctest.h"
#include "matchwalk/errors.hpp"
#include "matchwalk/io.hpp"
#include "oracles.hpp"

using namespace matchwalk;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("matchwalk_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("graph formats round-trip") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng.below(4)), 0.3);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(graph_from_edgelist(graph_to_edgelist(g)) == g);
  }
  const LabeledGraph g(2, {{0, 1}, {2, 3}});
  CHECK(graph_to_edgelist(g) == "#qubits 2\n0 1\n2 3\n");
  CHECK(graph_to_json(g).dump() == R"({"edges":[[0,1],[2,3]],"num_qubits":2})");
}

TEST_CASE("graph files") {
  const fs::path dir = scratch_dir("graphs");
  const LabeledGraph g = gen_hypercube(3);
  write_graph(g, dir / "q3.json");
  write_graph(g, dir / "q3.txt");
  CHECK(read_graph(dir / "q3.json") == g);
  CHECK(read_graph(dir / "q3.txt") == g);
  CHECK_THROWS_AS(read_graph(dir / "missing.json"), IoError);
  write_text_file(dir / "bad.json", "{\"num_qubits\": 2, \"edges\": [[0]]}");
  CHECK_THROWS_AS(read_graph(dir / "bad.json"), IoError);
  write_text_file(dir / "bad.txt", "0 1\n");
  CHECK_THROWS_AS(read_graph(dir / "bad.txt"), IoError);
  write_text_file(dir / "loop.txt", "#qubits 2\n1 1\n");
  CHECK_THROWS_AS(read_graph(dir / "loop.txt"), IoError);
  CHECK_THROWS_AS(write_text_file(dir / "no" / "such" / "file", "x"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("compressed matching and circuit JSON round-trip") {
  const auto m = greedy_matching_decompose(LabeledGraph(2, {{0, 3}, {1, 2}}))[0];
  const auto edges = compress_matching(m, 2);
  const json j = compressed_matching_to_json(edges);
  CHECK(j.dump() == R"([{"active":[1],"mask":3,"u":0,"v":1,"weight_reducing":[0]}])");
  CHECK(compressed_matching_from_json(j) == edges);

  GateCircuit c(3);
  c.append(Gate::cx(1, 0));
  c.append(Gate::mcrx(2, {{1, true}, {0, false}}, 0.25));
  c.append(Gate::sdg(1));
  CHECK(circuit_from_json(circuit_to_json(c), 3) == c);
  CHECK_THROWS(circuit_from_json(circuit_to_json(c), 2));
}

TEST_CASE("operator and witness JSON") {
  DenseOperator op = DenseOperator::Identity(2, 2);
  op(0, 1) = Complex(0.5, -1.0);
  CHECK(operator_to_json(op).dump() == "[[[1.0,0.0],[0.5,-1.0]],[[0.0,0.0],[1.0,0.0]]]");
  WitnessReport r;
  r.commuting_matching_found = true;
  r.pauli_noncommuting = true;
  r.witness_terms = {{"IXI", 0.5}, {"IYY", -0.5}};
  const json w = witness_to_json("q3", r);
  CHECK(w["graph_id"] == "q3");
  CHECK(w["witness_terms"][1]["word"] == "IYY");
  CHECK(w["witness_terms"][1]["coefficient"] == -0.5);
}
