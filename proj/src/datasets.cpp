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

#include "matchwalk/datasets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace matchwalk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_kind(const DatasetSpec& spec, DatasetKind expected) {
  if (spec.kind != expected) {
    throw std::invalid_argument(std::string("dataset kind must be ") +
                                std::string(to_string(expected)));
  }
}

}  // namespace

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::ConnectedPath:
      return "connected-path";
    case DatasetKind::ErdosRenyi:
      return "erdos-renyi";
    case DatasetKind::Hypercube:
      return "hypercube";
  }
  return "unknown";
}

DatasetKind parse_dataset_kind(std::string_view name) {
  if (name == "connected-path") return DatasetKind::ConnectedPath;
  if (name == "erdos-renyi") return DatasetKind::ErdosRenyi;
  if (name == "hypercube") return DatasetKind::Hypercube;
  throw std::invalid_argument("unknown dataset kind '" + std::string(name) + "'");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be > 0");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

int Rng::binomial(int trials, double p) {
  int k = 0;
  for (int i = 0; i < trials; ++i) k += bernoulli(p) ? 1 : 0;
  return k;
}

std::uint64_t instance_seed(std::uint64_t dataset_seed, std::uint64_t index) {
  return splitmix64(splitmix64(dataset_seed) ^ splitmix64(index + 1));
}

std::vector<LabeledGraph> gen_erdos_renyi(const DatasetSpec& spec) {
  check_kind(spec, DatasetKind::ErdosRenyi);
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  const int n = log2_exact(spec.num_vertices);
  std::vector<LabeledGraph> graphs;
  graphs.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Rng rng(instance_seed(spec.seed, i));
    std::vector<Edge> edges;
    for (Label a = 0; a < spec.num_vertices; ++a) {
      for (Label b = a + 1; b < spec.num_vertices; ++b) {
        if (rng.uniform01() < spec.edge_probability) edges.push_back({a, b});
      }
    }
    graphs.emplace_back(n, std::move(edges));
  }
  return graphs;
}

std::vector<LabeledGraph> gen_connected_path(const DatasetSpec& spec) {
  check_kind(spec, DatasetKind::ConnectedPath);
  const int n = log2_exact(spec.num_vertices);
  const Label num_vertices = spec.num_vertices;
  const std::uint64_t all_pairs = num_vertices * (num_vertices - 1) / 2;
  const std::uint64_t free_pairs = all_pairs - (num_vertices - 1);

  std::vector<LabeledGraph> graphs;
  graphs.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Rng rng(instance_seed(spec.seed, i));
    std::set<Edge> edges;
    for (Label x = 0; x + 1 < num_vertices; ++x) edges.insert({x, x + 1});

    std::uint64_t chords = 1 + (rng.bernoulli(0.8) ? 1 : 0) +
                           static_cast<std::uint64_t>(
                               rng.binomial(std::max(0, n - 5), 0.4));
    chords = std::min(chords, free_pairs);
    while (chords > 0) {
      const Label a = rng.below(num_vertices);
      const Label b = rng.below(num_vertices);
      if (a == b) continue;
      const Edge e = Edge::canonical(a, b);
      if (e.v - e.u == 1 || edges.contains(e)) continue;
      edges.insert(e);
      --chords;
    }
    graphs.emplace_back(n, std::vector<Edge>(edges.begin(), edges.end()));
  }
  return graphs;
}

std::vector<LabeledGraph> gen_hypercube_dataset(const DatasetSpec& spec) {
  check_kind(spec, DatasetKind::Hypercube);
  const int n = log2_exact(spec.num_vertices);
  return std::vector<LabeledGraph>(spec.count, gen_hypercube(n));
}

std::vector<LabeledGraph> generate_dataset(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetKind::ConnectedPath:
      return gen_connected_path(spec);
    case DatasetKind::ErdosRenyi:
      return gen_erdos_renyi(spec);
    case DatasetKind::Hypercube:
      return gen_hypercube_dataset(spec);
  }
  throw std::invalid_argument("unknown dataset kind");
}

}  // namespace matchwalk
