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

#include "matchwalk/commuting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace matchwalk {

VertexPermutation::VertexPermutation(int num_qubits, std::vector<Label> mapping)
    : num_qubits_(num_qubits), mapping_(std::move(mapping)) {
  if (num_qubits < 1 || num_qubits > 24) {
    throw std::invalid_argument("VertexPermutation: bad qubit count");
  }
  const Label dim = Label{1} << num_qubits;
  if (mapping_.size() != dim) {
    throw std::invalid_argument("VertexPermutation: mapping has wrong size");
  }
  std::vector<char> hit(dim, 0);
  for (Label y : mapping_) {
    if (y >= dim || hit[y]) {
      throw std::invalid_argument("VertexPermutation: mapping is not a bijection");
    }
    hit[y] = 1;
  }
}

VertexPermutation VertexPermutation::identity(int num_qubits) {
  std::vector<Label> m(std::size_t{1} << num_qubits);
  std::iota(m.begin(), m.end(), Label{0});
  return VertexPermutation(num_qubits, std::move(m));
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& inner) const {
  if (inner.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("compose: width mismatch");
  }
  std::vector<Label> m(mapping_.size());
  for (Label x = 0; x < m.size(); ++x) m[x] = mapping_[inner.mapping_[x]];
  return VertexPermutation(num_qubits_, std::move(m));
}

DenseOperator VertexPermutation::matrix() const {
  check_dense_qubits(num_qubits_);
  const auto dim = static_cast<Eigen::Index>(mapping_.size());
  DenseOperator u = DenseOperator::Zero(dim, dim);
  for (Label x = 0; x < mapping_.size(); ++x) {
    u(static_cast<Eigen::Index>(mapping_[x]), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return u;
}

VertexPermutation modular_times3_perm(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("modular_times3_perm: n >= 1");
  const Label mask = (Label{1} << num_qubits) - 1;
  std::vector<Label> m(std::size_t{1} << num_qubits);
  for (Label x = 0; x < m.size(); ++x) m[x] = (3 * x) & mask;
  return VertexPermutation(num_qubits, std::move(m));
}

VertexPermutation local_block_perm(int num_qubits, int block) {
  if (block < 0 || block > num_qubits - 3) {
    throw std::out_of_range("local_block_perm: block " + std::to_string(block) +
                            " not in [0, n-3] for n = " +
                            std::to_string(num_qubits));
  }
  const Label field = Label{7} << block;
  std::vector<Label> m(std::size_t{1} << num_qubits);
  for (Label x = 0; x < m.size(); ++x) {
    const Label bits = (x & field) >> block;
    m[x] = (x & ~field) | (((3 * bits) & 7U) << block);
  }
  return VertexPermutation(num_qubits, std::move(m));
}

LabeledGraph relabel_graph(const LabeledGraph& g, const VertexPermutation& perm) {
  if (perm.num_qubits() != g.num_qubits()) {
    throw std::invalid_argument("relabel_graph: permutation width mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm(e.u), perm(e.v)});
  return LabeledGraph(g.num_qubits(), std::move(edges));
}

Matching relabel_matching(const Matching& m, const VertexPermutation& perm) {
  Matching out;
  for (const Edge& e : m.edges) out.edges.push_back(Edge::canonical(perm(e.u), perm(e.v)));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool subgraphs_commute_by_paths(const std::vector<Edge>& g1,
                                const std::vector<Edge>& g2) {
  std::unordered_map<Label, std::vector<Label>> adj1;
  std::unordered_map<Label, std::vector<Label>> adj2;
  for (const Edge& e : g1) {
    adj1[e.u].push_back(e.v);
    adj1[e.v].push_back(e.u);
  }
  for (const Edge& e : g2) {
    adj2[e.u].push_back(e.v);
    adj2[e.v].push_back(e.u);
  }
  // paths[(u, v)] = #(first g1 then g2) - #(first g2 then g1).
  std::map<std::pair<Label, Label>, long long> balance;
  auto walk = [&](const auto& first, const auto& second, long long sign) {
    for (const auto& [u, mids] : first) {
      for (Label w : mids) {
        const auto it = second.find(w);
        if (it == second.end()) continue;
        for (Label v : it->second) balance[{u, v}] += sign;
      }
    }
  };
  walk(adj1, adj2, 1);
  walk(adj2, adj1, -1);
  return std::all_of(balance.begin(), balance.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

bool subgraphs_commute_by_paths(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.num_qubits() != g2.num_qubits()) {
    throw std::invalid_argument("subgraphs_commute_by_paths: vertex spaces differ");
  }
  return subgraphs_commute_by_paths(g1.edges(), g2.edges());
}

bool UnionStructure::commutes() const {
  return std::all_of(components.begin(), components.end(),
                     [](const UnionComponent& c) {
                       return c.kind == ComponentKind::K1 ||
                              c.kind == ComponentKind::K2 ||
                              c.kind == ComponentKind::C4;
                     });
}

std::size_t UnionStructure::count(ComponentKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(),
                    [&](const UnionComponent& c) { return c.kind == kind; }));
}

UnionStructure classify_matching_union(const Matching& m1, const Matching& m2,
                                       int num_qubits) {
  if (!m1.is_valid() || !m2.is_valid()) {
    throw std::invalid_argument("classify_matching_union: not a matching");
  }
  // A shared edge is one K2; otherwise union vertices have degree <= 2.
  std::set<Edge> simple;
  for (const Matching* m : {&m1, &m2}) {
    for (const Edge& e : m->edges) simple.insert(Edge::canonical(e.u, e.v));
  }
  std::unordered_map<Label, std::vector<Label>> adj;
  for (const Edge& e : simple) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  UnionStructure out;
  std::unordered_map<Label, char> seen;
  std::vector<Label> order;
  for (const auto& [v, nbrs] : adj) order.push_back(v);
  std::sort(order.begin(), order.end());
  for (Label start : order) {
    if (seen[start]) continue;
    std::vector<Label> stack{start};
    seen[start] = 1;
    std::size_t vertices = 0;
    std::size_t degree_sum = 0;
    while (!stack.empty()) {
      const Label x = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += adj[x].size();
      for (Label y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    const std::size_t edges = degree_sum / 2;
    UnionComponent c{ComponentKind::Path, vertices, edges};
    if (edges == vertices) {
      c.kind = edges == 4 ? ComponentKind::C4 : ComponentKind::Cycle;
    } else if (edges == 1) {
      c.kind = ComponentKind::K2;
    }
    out.components.push_back(c);
  }
  const std::uint64_t total = std::uint64_t{1} << num_qubits;
  for (std::uint64_t i = adj.size(); i < total; ++i) {
    out.components.push_back({ComponentKind::K1, 1, 0});
  }
  return out;
}

bool is_commuting_decomposition(const LabeledGraph& g,
                                const std::vector<Matching>& matchings) {
  std::vector<Edge> all;
  for (const Matching& m : matchings) {
    if (!m.is_valid()) return false;
    for (const Edge& e : m.edges) all.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(all.begin(), all.end());
  if (all != g.edges()) return false;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    for (std::size_t j = i + 1; j < matchings.size(); ++j) {
      if (!classify_matching_union(matchings[i], matchings[j], g.num_qubits())
               .commutes()) {
        return false;
      }
    }
  }
  return true;
}

WitnessReport pauli_witness_check(
    const LabeledGraph& g, const std::vector<std::vector<Matching>>& candidates) {
  if (g.num_qubits() > 6) {
    throw std::invalid_argument("pauli_witness_check: at most 6 qubits");
  }
  WitnessReport report;
  report.commuting_matching_found =
      is_commuting_decomposition(g, greedy_matching_decompose(g));
  for (const auto& cand : candidates) {
    if (report.commuting_matching_found) break;
    report.commuting_matching_found = is_commuting_decomposition(g, cand);
  }

  const auto terms = pauli_decompose(adjacency_matrix(g), g.num_qubits());
  for (std::size_t i = 0; i < terms.size() && !report.pauli_noncommuting; ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (anticommute(terms[i].word, terms[j].word)) {
        report.pauli_noncommuting = true;
        report.witness_terms = {terms[i], terms[j]};
        break;
      }
    }
  }
  return report;
}

std::vector<Matching> hypercube_bit_matchings(int num_qubits) {
  const LabeledGraph q = gen_hypercube(num_qubits);
  std::vector<Matching> out(static_cast<std::size_t>(num_qubits));
  for (const Edge& e : q.edges()) {
    out[static_cast<std::size_t>(std::countr_zero(e.mask()))].edges.push_back(e);
  }
  return out;
}

WitnessReport relabeled_hypercube_witness(const VertexPermutation& perm) {
  const int n = perm.num_qubits();
  const LabeledGraph relabeled = relabel_graph(gen_hypercube(n), perm);
  std::vector<Matching> image;
  for (const Matching& m : hypercube_bit_matchings(n)) {
    image.push_back(relabel_matching(m, perm));
  }
  return pauli_witness_check(relabeled, {image});
}

}  // namespace matchwalk
