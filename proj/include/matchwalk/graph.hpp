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

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "matchwalk/dense.hpp"

namespace matchwalk {

/// A basis-state label. Bit i is qubit i (least significant bit is qubit 0).
using Label = std::uint64_t;

/// Largest supported register width for labels.
inline constexpr int kMaxQubits = 62;

/// Undirected edge between two basis-state labels, stored with u < v.
struct Edge {
  Label u = 0;
  Label v = 0;

  static Edge canonical(Label a, Label b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  Label mask() const { return u ^ v; }
  bool touches(Label x) const { return u == x || v == x; }

  auto operator<=>(const Edge&) const = default;
};

int hamming_distance(Label u, Label v);

/// Hamming distance between two '0'/'1' strings of equal width.
int hamming_distance(std::string_view u, std::string_view v);

/// Renders `x` as an n-character bitstring, most significant qubit first.
std::string to_bitstring(Label x, int num_qubits);
Label from_bitstring(std::string_view bits);

/// Simple undirected graph on the 2^n basis states of an n-qubit register.
///
/// Edges are kept sorted and canonical; construction rejects self-loops,
/// duplicates and labels that do not fit in n bits.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int num_qubits, std::vector<Edge> edges);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t num_vertices() const { return std::uint64_t{1} << num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_edge(Label a, Label b) const;
  /// Adjacency lists indexed by label; requires num_vertices() to fit memory.
  std::vector<std::vector<Label>> adjacency_lists() const;
  std::size_t max_degree() const;
  bool is_connected() const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  int num_qubits_ = 1;
  std::vector<Edge> edges_;
};

/// 2^n x 2^n symmetric 0/1 adjacency matrix.
DenseOperator adjacency_matrix(const LabeledGraph& g);

/// Adjacency matrix of an arbitrary edge list on n qubits.
DenseOperator adjacency_matrix(const std::vector<Edge>& edges, int num_qubits);

/// The hypercube Q_n: edges between labels at Hamming distance one.
LabeledGraph gen_hypercube(int num_qubits);

/// log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(std::uint64_t num_vertices);

}  // namespace matchwalk
