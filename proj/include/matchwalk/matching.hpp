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
#include <optional>
#include <vector>

#include "matchwalk/graph.hpp"

namespace matchwalk {

/// A set of vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  bool is_valid() const;
  bool operator==(const Matching&) const = default;
};

struct DecomposeOptions {
  /// When set, edges of Hamming distance > 1 are placed in a seeded random
  /// order instead of the sorted (distance, labels) order.
  std::optional<std::uint64_t> scan_seed;
};

/// Greedy matching decomposition.
///
/// Distance-one edges are grouped by their flipped bit, one matching per
/// occupied bit position in ascending order. Every other edge, taken in
/// ascending (Hamming distance, min label, max label) order, goes to the first
/// matching it does not conflict with, or opens a new one.
std::vector<Matching> greedy_matching_decompose(
    const LabeledGraph& g, const DecomposeOptions& options = {});

/// A matching edge after iterative compression.
///
/// The compressed labels u, v have one bit per entry of `active`; compressed
/// bit p stands for original qubit active[p]. `weight_reducing` lists deleted
/// qubits at which the original endpoints differ, and `mask` is the XOR of the
/// original endpoints (never updated by merges).
struct CompressedEdge {
  Label u = 0;
  Label v = 0;
  std::vector<int> active;
  std::vector<int> weight_reducing;
  Label mask = 0;

  /// An uncompressed edge: active = (0..n-1), no weight-reducing qubits.
  static CompressedEdge fresh(const Edge& e, int num_qubits);

  int width() const { return static_cast<int>(active.size()); }
  auto operator<=>(const CompressedEdge&) const = default;
};

/// Removes bit k, shifting the higher bits down by one.
Label delete_bit(Label x, int k);
/// Inverse of delete_bit: opens position k and writes `bit` there.
Label insert_bit(Label x, int k, bool bit);

/// Smallest compressed position p at which the two edges merge: equal masks,
/// equal active and weight-reducing lists, and endpoints that differ only in
/// bit p under one of the two pairings.
std::optional<int> mergeable_at(const CompressedEdge& a, const CompressedEdge& b);

/// Collapses `e` at compressed position p (the partner edge is implied).
CompressedEdge merge_at(const CompressedEdge& e, int p);

/// Iterative graph compression of one matching on n qubits, run to a fixed
/// point. Edges are kept sorted by (mask, active, weight_reducing, labels);
/// pairs are scanned lexicographically and the scan restarts after each merge.
std::vector<CompressedEdge> compress_matching(const Matching& m, int num_qubits);

/// The 2^(n - width) original edges represented by `e`, sorted.
std::vector<Edge> expand_edge(const CompressedEdge& e, int num_qubits);

}  // namespace matchwalk
