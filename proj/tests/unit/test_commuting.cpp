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

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "matchwalk/commuting.hpp"
#include "matchwalk/dense.hpp"
#include "oracles.hpp"

using namespace matchwalk;

namespace {

// The permutation matrix and relabeled hypercube printed for x -> 3x mod 8.
const int kUf[8][8] = {
    {1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}};
const int kAPrime[8][8] = {
    {0, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 1, 1, 0},
    {1, 1, 0, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 0, 0, 0, 1}, {0, 1, 1, 0, 0, 0, 0, 1},
    {1, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0, 0}};

bool by_commutator(const Matching& a, const Matching& b, int n) {
  return commutator_norm(adjacency_matrix(a.edges, n), adjacency_matrix(b.edges, n)) <
         1e-12;
}

// All matchings on the 2^n vertices (n <= 2 enumerates quickly; n = 3 gives
// 764 matchings).
void all_matchings(const std::vector<Label>& free, Matching& cur,
                   std::vector<Matching>& out) {
  if (free.empty()) {
    Matching m = cur;
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(m);
    return;
  }
  // Either leave free[0] unmatched or pair it with a later vertex.
  std::vector<Label> rest(free.begin() + 1, free.end());
  all_matchings(rest, cur, out);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<Label> remaining = rest;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
    cur.edges.push_back({free[0], rest[i]});
    all_matchings(remaining, cur, out);
    cur.edges.pop_back();
  }
}

}  // namespace

TEST_CASE("permutations") {
  const auto f3 = modular_times3_perm(3);
  CHECK(f3(1) == 3);
  CHECK(f3(2) == 6);
  CHECK(f3(5) == 7);
  CHECK(modular_times3_perm(1) == VertexPermutation::identity(1));
  CHECK(f3.compose(f3) == VertexPermutation::identity(3));
  const auto u = f3.matrix();
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(u(r, c) == Complex(kUf[r][c], 0));
  }
  CHECK_THROWS_AS(VertexPermutation(2, {0, 1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(VertexPermutation(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(VertexPermutation(2, {0, 1, 2, 4}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) CHECK_NOTHROW(modular_times3_perm(n));
}

TEST_CASE("local block permutation") {
  CHECK(local_block_perm(3, 0) == modular_times3_perm(3));
  CHECK(local_block_perm(4, 1)(0b0010) == 0b0110);
  CHECK_THROWS_AS(local_block_perm(4, 2), std::out_of_range);
  CHECK_THROWS_AS(local_block_perm(4, -1), std::out_of_range);
  CHECK_THROWS_AS(local_block_perm(2, 0), std::out_of_range);
  // Its unitary is I (x) U_f (x) I.
  const auto perm = local_block_perm(5, 1);
  oracle::Mat uf(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) uf(r, c) = kUf[r][c];
  }
  const oracle::Mat expected = oracle::kron(
      oracle::kron(oracle::Mat::Identity(2, 2), uf), oracle::Mat::Identity(2, 2));
  CHECK(oracle::frob(perm.matrix(), expected) == 0.0);
}

TEST_CASE("relabeling") {
  const LabeledGraph q3 = gen_hypercube(3);
  CHECK(relabel_graph(q3, VertexPermutation::identity(3)) == q3);
  const LabeledGraph relabeled = relabel_graph(q3, modular_times3_perm(3));
  const DenseOperator a = adjacency_matrix(relabeled);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(a(r, c) == Complex(kAPrime[r][c], 0));
  }
  const DenseOperator uf = modular_times3_perm(3).matrix();
  CHECK(oracle::frob(a, uf * adjacency_matrix(q3) * uf.adjoint()) == 0.0);
  CHECK_THROWS(relabel_graph(q3, VertexPermutation::identity(2)));
}

TEST_CASE("path-count criterion") {
  const LabeledGraph m0(2, {{0, 1}, {2, 3}});
  const LabeledGraph m1(2, {{0, 3}, {1, 2}});
  CHECK(subgraphs_commute_by_paths(m0, m0));
  CHECK(subgraphs_commute_by_paths(m0, m1));
  CHECK_FALSE(subgraphs_commute_by_paths(LabeledGraph(2, {{0, 1}}),
                                         LabeledGraph(2, {{1, 3}})));
  CHECK_THROWS(subgraphs_commute_by_paths(LabeledGraph(2, {}), LabeledGraph(3, {})));
}

TEST_CASE("union classification") {
  const auto disjoint = classify_matching_union(Matching{{{0, 1}}}, Matching{{{2, 3}}}, 3);
  CHECK(disjoint.count(ComponentKind::K2) == 2);
  CHECK(disjoint.count(ComponentKind::K1) == 4);
  CHECK(disjoint.commutes());

  const auto cycle = classify_matching_union(Matching{{{0, 1}, {2, 3}}},
                                             Matching{{{0, 3}, {1, 2}}}, 2);
  REQUIRE(cycle.components.size() == 1);
  CHECK(cycle.components[0].kind == ComponentKind::C4);
  CHECK(cycle.commutes());

  const Matching a{{{0, 1}}};
  const Matching b{{{1, 3}}};
  const auto path = classify_matching_union(a, b, 2);
  CHECK(path.count(ComponentKind::Path) == 1);
  CHECK_FALSE(path.commutes());
  CHECK_FALSE(by_commutator(a, b, 2));

  const auto shared = classify_matching_union(a, a, 2);
  CHECK(shared.count(ComponentKind::K2) == 1);
  CHECK(shared.commutes());

  const auto six = classify_matching_union(Matching{{{0, 1}, {2, 3}, {4, 5}}},
                                           Matching{{{1, 2}, {3, 4}, {0, 5}}}, 3);
  CHECK(six.count(ComponentKind::Cycle) == 1);
  CHECK_FALSE(six.commutes());

  CHECK_THROWS(classify_matching_union(Matching{{{0, 1}, {1, 2}}}, a, 2));
}

TEST_CASE("three commutativity verdicts agree on every pair for n = 3") {
  std::vector<Label> verts(8);
  for (Label x = 0; x < 8; ++x) verts[x] = x;
  std::vector<Matching> ms;
  Matching cur;
  all_matchings(verts, cur, ms);
  CHECK(ms.size() == 764);
  std::size_t commuting = 0;
  for (std::size_t i = 0; i < ms.size(); i += 3) {
    for (std::size_t j = 0; j < ms.size(); j += 5) {
      const bool by_union = classify_matching_union(ms[i], ms[j], 3).commutes();
      CHECK(by_union == subgraphs_commute_by_paths(ms[i].edges, ms[j].edges));
      CHECK(by_union == by_commutator(ms[i], ms[j], 3));
      commuting += by_union ? 1 : 0;
    }
  }
  CHECK(commuting > 0);
}

TEST_CASE("relabeling keeps commuting pairs commuting") {
  Rng rng(13);
  std::size_t tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Matching a = oracle::random_matching(rng, n, 3);
    const Matching b = oracle::random_matching(rng, n, 3);
    if (!classify_matching_union(a, b, n).commutes()) continue;
    ++tested;
    std::vector<Label> map(std::size_t{1} << n);
    for (Label x = 0; x < map.size(); ++x) map[x] = x;
    rng.shuffle(map);
    const VertexPermutation perm(n, map);
    const Matching pa = relabel_matching(a, perm);
    const Matching pb = relabel_matching(b, perm);
    CHECK(classify_matching_union(pa, pb, n).commutes());
    CHECK(by_commutator(pa, pb, n));
  }
  CHECK(tested > 10);
}

TEST_CASE("witness check") {
  const auto rel = relabeled_hypercube_witness(modular_times3_perm(3));
  CHECK(rel.commuting_matching_found);
  CHECK(rel.pauli_noncommuting);
  REQUIRE(rel.witness_terms.size() == 2);
  CHECK(rel.witness_terms[0] == PauliTerm{"IXI", 0.5});
  CHECK(rel.witness_terms[1] == PauliTerm{"IYY", -0.5});

  const auto plain = pauli_witness_check(gen_hypercube(3));
  CHECK(plain.commuting_matching_found);
  CHECK_FALSE(plain.pauli_noncommuting);
  CHECK(plain.witness_terms.empty());

  const auto single = pauli_witness_check(LabeledGraph(2, {{0, 3}}));
  CHECK(single.commuting_matching_found);
  CHECK_FALSE(single.pauli_noncommuting);

  CHECK_THROWS(pauli_witness_check(gen_hypercube(7)));
}

TEST_CASE("decomposition-level commuting check") {
  const LabeledGraph q3 = gen_hypercube(3);
  CHECK(is_commuting_decomposition(q3, hypercube_bit_matchings(3)));
  auto broken = hypercube_bit_matchings(3);
  broken[0].edges.pop_back();
  CHECK_FALSE(is_commuting_decomposition(q3, broken));
  const LabeledGraph path(2, {{0, 1}, {1, 3}});
  CHECK_FALSE(is_commuting_decomposition(path, greedy_matching_decompose(path)));
}

TEST_CASE("block relabelings of larger hypercubes") {
  const auto r = relabeled_hypercube_witness(local_block_perm(5, 2));
  CHECK(r.commuting_matching_found);
  CHECK(r.pauli_noncommuting);
  REQUIRE(r.witness_terms.size() == 2);
  CHECK(anticommute(r.witness_terms[0].word, r.witness_terms[1].word));
  const auto terms = pauli_decompose(
      adjacency_matrix(relabel_graph(gen_hypercube(5), local_block_perm(5, 2))), 5);
  const auto has = [&](const std::string& w) {
    return std::any_of(terms.begin(), terms.end(),
                       [&](const PauliTerm& t) { return t.word == w; });
  };
  // X on qubit 3 and Y Y on qubits 3 and 2.
  CHECK(has("IXIII"));
  CHECK(has("IYYII"));
}
