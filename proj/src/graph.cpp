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

#include "matchwalk/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace matchwalk {

int hamming_distance(Label u, Label v) { return std::popcount(u ^ v); }

int hamming_distance(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument(
        "hamming_distance: width mismatch (" + std::to_string(u.size()) +
        " vs " + std::to_string(v.size()) + ")");
  }
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] != '0' && u[i] != '1') || (v[i] != '0' && v[i] != '1')) {
      throw std::invalid_argument("hamming_distance: not a bitstring");
    }
    if (u[i] != v[i]) ++d;
  }
  return d;
}

std::string to_bitstring(Label x, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((x >> q) & 1U) s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
  }
  return s;
}

Label from_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("from_bitstring: bad width");
  }
  Label x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("from_bitstring: not a bitstring");
    }
    x = (x << 1) | static_cast<Label>(c == '1');
  }
  return x;
}

int log2_exact(std::uint64_t num_vertices) {
  if (num_vertices < 2 || !std::has_single_bit(num_vertices)) {
    throw std::invalid_argument("vertex count " + std::to_string(num_vertices) +
                                " is not a power of two >= 2");
  }
  return std::countr_zero(num_vertices);
}

LabeledGraph::LabeledGraph(int num_qubits, std::vector<Edge> edges)
    : num_qubits_(num_qubits), edges_(std::move(edges)) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("LabeledGraph: num_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  const Label limit = Label{1} << num_qubits;
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("LabeledGraph: self-loop at " +
                                  std::to_string(e.u));
    }
    if (e.u >= limit || e.v >= limit) {
      throw std::invalid_argument("LabeledGraph: label does not fit in " +
                                  std::to_string(num_qubits) + " bits");
    }
    e = Edge::canonical(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("LabeledGraph: duplicate edge");
  }
}

bool LabeledGraph::has_edge(Label a, Label b) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            Edge::canonical(a, b));
}

std::vector<std::vector<Label>> LabeledGraph::adjacency_lists() const {
  std::vector<std::vector<Label>> adj(num_vertices());
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::size_t LabeledGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_lists()) best = std::max(best, nbrs.size());
  return best;
}

bool LabeledGraph::is_connected() const {
  const auto adj = adjacency_lists();
  std::vector<char> seen(adj.size(), 0);
  std::deque<Label> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Label x = queue.front();
    queue.pop_front();
    for (Label y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == adj.size();
}

DenseOperator adjacency_matrix(const std::vector<Edge>& edges, int num_qubits) {
  check_dense_qubits(num_qubits);
  const auto dim = static_cast<Eigen::Index>(Label{1} << num_qubits);
  DenseOperator a = DenseOperator::Zero(dim, dim);
  for (const Edge& e : edges) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    if (u >= dim || v >= dim) {
      throw std::invalid_argument("adjacency_matrix: label out of range");
    }
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

DenseOperator adjacency_matrix(const LabeledGraph& g) {
  return adjacency_matrix(g.edges(), g.num_qubits());
}

LabeledGraph gen_hypercube(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("gen_hypercube: n must be >= 1");
  }
  if (num_qubits > 24) {
    throw std::invalid_argument("gen_hypercube: n too large");
  }
  std::vector<Edge> edges;
  const Label n_vertices = Label{1} << num_qubits;
  for (Label x = 0; x < n_vertices; ++x) {
    for (int q = 0; q < num_qubits; ++q) {
      const Label y = x ^ (Label{1} << q);
      if (x < y) edges.push_back({x, y});
    }
  }
  return LabeledGraph(num_qubits, std::move(edges));
}

}  // namespace matchwalk
