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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "matchwalk/datasets.hpp"
#include "matchwalk/io.hpp"
#include "oracles.hpp"

using namespace matchwalk;

namespace {

double mean_edges(const std::vector<LabeledGraph>& graphs) {
  double sum = 0.0;
  for (const auto& g : graphs) sum += static_cast<double>(g.num_edges());
  return sum / static_cast<double>(graphs.size());
}

}  // namespace

TEST_CASE("rng primitives are portable") {
  // mt19937_64's 10000th output for the default seed is fixed by the standard.
  Rng ref(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = ref.next();
  CHECK(x == 9981545732273789042ULL);

  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(7) < 7);
  }
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
  CHECK(instance_seed(1, 0) != instance_seed(1, 1));
  CHECK(instance_seed(1, 0) != instance_seed(2, 0));
}

TEST_CASE("erdos-renyi extremes") {
  const auto empty = gen_erdos_renyi({DatasetKind::ErdosRenyi, 8, 0.0, 1, 20});
  for (const auto& g : empty) CHECK(g.num_edges() == 0);
  const auto full = gen_erdos_renyi({DatasetKind::ErdosRenyi, 16, 1.0, 1, 3});
  for (const auto& g : full) CHECK(g.num_edges() == 16 * 15 / 2);
  CHECK_THROWS_AS(gen_erdos_renyi({DatasetKind::ErdosRenyi, 8, 1.5, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_erdos_renyi({DatasetKind::ErdosRenyi, 8, -0.1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_erdos_renyi({DatasetKind::ErdosRenyi, 12, 0.5, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("erdos-renyi edge count matches binomial expectation") {
  const DatasetSpec spec{DatasetKind::ErdosRenyi, 128, 0.01, 2024, 100};
  const auto graphs = gen_erdos_renyi(spec);
  const double pairs = 128.0 * 127.0 / 2.0;
  const double expected = pairs * 0.01;
  // Standard error of the mean of 100 Binomial(pairs, p) draws.
  const double se = std::sqrt(pairs * 0.01 * 0.99 / 100.0);
  CHECK(std::abs(mean_edges(graphs) - expected) < 3.0 * se);
}

TEST_CASE("connected-path graphs contain the numeric path and are connected") {
  for (std::uint64_t vertices : {8ULL, 16ULL, 32ULL, 64ULL, 128ULL}) {
    const auto graphs =
        gen_connected_path({DatasetKind::ConnectedPath, vertices, 0.0, 99, 40});
    for (const auto& g : graphs) {
      CHECK(oracle::bfs_connected(g.edges(), g.num_qubits()));
      for (Label x = 0; x + 1 < vertices; ++x) CHECK(g.has_edge(x, x + 1));
      CHECK(g.num_edges() >= vertices);
      for (const Edge& e : g.edges()) {
        CHECK(e.u < e.v);
        CHECK(e.v < vertices);
      }
    }
  }
  CHECK_THROWS_AS(gen_connected_path({DatasetKind::ConnectedPath, 10, 0.0, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("pure numeric path properties") {
  std::vector<Edge> path;
  for (Label x = 0; x + 1 < 8; ++x) path.push_back({x, x + 1});
  const LabeledGraph g(3, path);
  CHECK(g.num_edges() == 7);
  CHECK(g.is_connected());
  CHECK(g.max_degree() == 2);
}

TEST_CASE("hamming census of the numeric path") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::size_t> census(static_cast<std::size_t>(n) + 1, 0);
    for (Label x = 0; x + 1 < (Label{1} << n); ++x) {
      ++census[static_cast<std::size_t>(hamming_distance(x, x + 1))];
    }
    for (int k = 1; k <= n; ++k) {
      CHECK(census[static_cast<std::size_t>(k)] == (std::size_t{1} << (n - k)));
    }
  }
}

TEST_CASE("connected-path 8-vertex mean edge count tracks the reference") {
  const auto graphs =
      gen_connected_path({DatasetKind::ConnectedPath, 8, 0.0, 7, 200});
  const double mean = mean_edges(graphs);
  CHECK(mean >= 8.4);
  CHECK(mean <= 9.2);
}

TEST_CASE("datasets are deterministic per seed") {
  for (DatasetKind kind :
       {DatasetKind::ConnectedPath, DatasetKind::ErdosRenyi, DatasetKind::Hypercube}) {
    const DatasetSpec spec{kind, 16, 0.2, 5, 10};
    const auto a = generate_dataset(spec);
    const auto b = generate_dataset(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(graph_to_edgelist(a[i]) == graph_to_edgelist(b[i]));
    }
  }
  DatasetSpec other{DatasetKind::ErdosRenyi, 16, 0.2, 6, 1};
  CHECK_FALSE(generate_dataset(other)[0] ==
              generate_dataset({DatasetKind::ErdosRenyi, 16, 0.2, 5, 1})[0]);
}

TEST_CASE("dataset kind names round-trip") {
  for (DatasetKind kind :
       {DatasetKind::ConnectedPath, DatasetKind::ErdosRenyi, DatasetKind::Hypercube}) {
    CHECK(parse_dataset_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_dataset_kind("ring"), std::invalid_argument);
  CHECK(gen_hypercube_dataset({DatasetKind::Hypercube, 8, 0.0, 0, 2})[1] ==
        gen_hypercube(3));
}
