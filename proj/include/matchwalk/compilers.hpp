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

#include <string>
#include <vector>

#include "matchwalk/circuit.hpp"
#include "matchwalk/graph.hpp"
#include "matchwalk/matching.hpp"

namespace matchwalk {

/// Total evolution time and number of first-order Trotter steps. An empty
/// term_order means ascending term index; otherwise it must be a permutation
/// of the term indices and is reused for every step.
struct TrotterPlan {
  double time = 1.0;
  int steps = 1;
  std::vector<std::size_t> term_order;

  void validate(std::size_t num_terms) const;
};

// ---------------------------------------------------------------------------
// Matching decomposition compiler

/// Index of the compressed bit used as the Rx target: the lowest position at
/// which u and v differ.
int target_position(const CompressedEdge& e);

/// exp(-i angle A_e) for the edges represented by `e`:
///   1. CX from the target qubit onto every weight-reducing qubit and every
///      other active qubit where u and v differ,
///   2. MCRX(2 angle) on the target, controlled by the remaining active
///      qubits with the values shared by the (transformed) endpoints,
///   3. the CX layer of step 1 in reverse.
GateCircuit edge_circuit(const CompressedEdge& e, double angle, int num_qubits);

/// exp(-i angle A_m): edge circuits over compress_matching(m).
GateCircuit matching_circuit(const Matching& m, double angle, int num_qubits);

/// Same unitary without compression; one edge circuit per raw edge.
GateCircuit matching_circuit_uncompressed(const Matching& m, double angle,
                                          int num_qubits);

/// steps repetitions of the matching circuits at angle time/steps. Matching
/// order follows plan.term_order (ascending by default).
GateCircuit compile_matching_trotter(const LabeledGraph& g,
                                     const TrotterPlan& plan,
                                     const DecomposeOptions& options = {});

// ---------------------------------------------------------------------------
// Pauli decomposition baseline

/// Coefficient of one Pauli string. `word` is written most significant qubit
/// first, so word[n - 1 - q] is the letter acting on qubit q.
struct PauliTerm {
  std::string word;
  double coefficient = 0.0;

  bool is_identity() const;
  bool operator==(const PauliTerm&) const = default;
};

/// Largest register for which all 4^n strings are enumerated.
inline constexpr int kMaxPauliQubits = 8;

/// All terms c_P = Tr(P^dagger A) / 2^n with |c_P| > 1e-12, in lexicographic
/// order with I < X < Y < Z. A must be 2^n x 2^n and real symmetric.
std::vector<PauliTerm> pauli_decompose(const DenseOperator& a, int num_qubits);

/// Sum of c_P P.
DenseOperator pauli_sum(const std::vector<PauliTerm>& terms, int num_qubits);
DenseOperator pauli_matrix(const std::string& word);

/// True when the two strings anti-commute (odd number of positions carrying
/// different non-identity letters).
bool anticommute(const std::string& a, const std::string& b);

/// exp(-i theta P) as basis change, CX ladder onto the highest non-identity
/// qubit, Rz(2 theta), and the mirror image. X letters use H; Y letters use
/// SDG then H. An all-identity word only contributes global phase.
GateCircuit pauli_evolution_circuit(const PauliTerm& term, double time,
                                    int num_qubits);

/// steps repetitions of the per-term circuits at time time/steps.
GateCircuit compile_pauli_trotter(const std::vector<PauliTerm>& terms,
                                  const TrotterPlan& plan, int num_qubits);

}  // namespace matchwalk
