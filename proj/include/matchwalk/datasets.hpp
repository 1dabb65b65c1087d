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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matchwalk/graph.hpp"

namespace matchwalk {

enum class DatasetKind { ConnectedPath, ErdosRenyi, Hypercube };

std::string_view to_string(DatasetKind kind);
/// Accepts "connected-path", "erdos-renyi", "hypercube".
DatasetKind parse_dataset_kind(std::string_view name);

struct DatasetSpec {
  DatasetKind kind = DatasetKind::ConnectedPath;
  std::uint64_t num_vertices = 8;  // power of two
  double edge_probability = 0.0;   // Erdős–Rényi only
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Portable randomness. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the distributions below are written out here
/// because the standard library ones differ between implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform01() < p; }
  int binomial(int trials, double p);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the index-th graph of a dataset (splitmix64 of seed and index).
std::uint64_t instance_seed(std::uint64_t dataset_seed, std::uint64_t index);

/// Each unordered vertex pair is kept independently with probability p.
std::vector<LabeledGraph> gen_erdos_renyi(const DatasetSpec& spec);

/// Numeric-order Hamiltonian path 0 -> 1 -> ... -> N-1 plus a few random
/// chords. The number of chords is 1 + Bernoulli(0.8) + Binomial(max(0, n-5),
/// 0.4), drawn per graph, which tracks the edge counts of the reference
/// datasets (about N + 0.8 for small N, N + 1.6 at N = 128).
std::vector<LabeledGraph> gen_connected_path(const DatasetSpec& spec);

/// `count` copies of Q_n with N = 2^n.
std::vector<LabeledGraph> gen_hypercube_dataset(const DatasetSpec& spec);

/// Dispatches on spec.kind.
std::vector<LabeledGraph> generate_dataset(const DatasetSpec& spec);

}  // namespace matchwalk
