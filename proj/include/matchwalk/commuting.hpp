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

#include <optional>
#include <string>
#include <vector>

#include "matchwalk/compilers.hpp"
#include "matchwalk/graph.hpp"
#include "matchwalk/matching.hpp"

namespace matchwalk {

/// Bijective relabeling of the 2^n basis states.
class VertexPermutation {
 public:
  /// Throws std::invalid_argument unless `mapping` is a bijection on
  /// {0, ..., 2^n - 1}.
  VertexPermutation(int num_qubits, std::vector<Label> mapping);

  static VertexPermutation identity(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  Label operator()(Label x) const { return mapping_.at(x); }
  const std::vector<Label>& mapping() const { return mapping_; }

  VertexPermutation compose(const VertexPermutation& inner) const;

  /// U_f with column x holding its single 1 in row f(x).
  DenseOperator matrix() const;

  bool operator==(const VertexPermutation&) const = default;

 private:
  int num_qubits_;
  std::vector<Label> mapping_;
};

/// x -> 3x mod 2^n.
VertexPermutation modular_times3_perm(int num_qubits);

/// Applies x -> 3x mod 8 to the 3-bit block at qubits i, i+1, i+2 and leaves
/// every other bit alone. Requires 0 <= i <= n - 3.
VertexPermutation local_block_perm(int num_qubits, int block);

LabeledGraph relabel_graph(const LabeledGraph& g, const VertexPermutation& perm);
Matching relabel_matching(const Matching& m, const VertexPermutation& perm);

/// Path-count criterion: for every ordered vertex pair, the number of
/// two-step walks taking an edge of g1 then g2 equals the number taking g2
/// then g1.
bool subgraphs_commute_by_paths(const std::vector<Edge>& g1,
                                const std::vector<Edge>& g2);
bool subgraphs_commute_by_paths(const LabeledGraph& g1, const LabeledGraph& g2);

enum class ComponentKind { K1, K2, C4, Path, Cycle };

struct UnionComponent {
  ComponentKind kind;
  std::size_t num_vertices;
  std::size_t num_edges;  // for Path / Cycle, the length

  bool operator==(const UnionComponent&) const = default;
};

struct UnionStructure {
  std::vector<UnionComponent> components;

  /// True iff every component is K1, K2 or C4.
  bool commutes() const;
  std::size_t count(ComponentKind kind) const;
};

/// Components of the union of two matchings on n qubits. Isolated vertices
/// of the full 2^n vertex space are reported as K1. An edge present in both
/// matchings forms a K2 component.
UnionStructure classify_matching_union(const Matching& m1, const Matching& m2,
                                       int num_qubits);

/// Decomposition-level check: `matchings` partition the edge set of `g` and
/// their adjacency matrices pairwise commute (by the union classification).
bool is_commuting_decomposition(const LabeledGraph& g,
                                const std::vector<Matching>& matchings);

struct WitnessReport {
  bool commuting_matching_found = false;
  bool pauli_noncommuting = false;
  /// First anti-commuting pair found, with coefficients.
  std::vector<PauliTerm> witness_terms;
};

/// Tries the greedy decomposition of `g` and then each candidate
/// decomposition in turn; reports whether any is a commuting decomposition,
/// and whether the Pauli expansion of g's adjacency matrix has an
/// anti-commuting pair. Requires n <= 6.
WitnessReport pauli_witness_check(
    const LabeledGraph& g,
    const std::vector<std::vector<Matching>>& candidates = {});

/// The decomposition of Q_n into its n bit-flip matchings.
std::vector<Matching> hypercube_bit_matchings(int num_qubits);

/// Runs pauli_witness_check on Q_n relabeled by `perm`, offering the image of
/// the bit-flip decomposition as a candidate.
WitnessReport relabeled_hypercube_witness(const VertexPermutation& perm);

}  // namespace matchwalk
