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

#include "matchwalk/matching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

#include "matchwalk/datasets.hpp"

namespace matchwalk {

bool Matching::is_valid() const {
  std::unordered_set<Label> seen;
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return true;
}

std::vector<Matching> greedy_matching_decompose(const LabeledGraph& g,
                                                const DecomposeOptions& options) {
  std::map<int, Matching> by_flip;
  std::vector<Edge> multi;
  for (const Edge& e : g.edges()) {
    if (hamming_distance(e.u, e.v) == 1) {
      by_flip[std::countr_zero(e.mask())].edges.push_back(e);
    } else {
      multi.push_back(e);
    }
  }

  std::vector<Matching> matchings;
  std::vector<std::unordered_set<Label>> used;
  for (auto& [bit, m] : by_flip) {
    std::unordered_set<Label> vertices;
    for (const Edge& e : m.edges) {
      vertices.insert(e.u);
      vertices.insert(e.v);
    }
    matchings.push_back(std::move(m));
    used.push_back(std::move(vertices));
  }

  std::sort(multi.begin(), multi.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(hamming_distance(a.u, a.v), a.u, a.v) <
           std::tuple(hamming_distance(b.u, b.v), b.u, b.v);
  });
  if (options.scan_seed) {
    Rng rng(*options.scan_seed);
    rng.shuffle(multi);
  }

  for (const Edge& e : multi) {
    std::size_t slot = 0;
    while (slot < matchings.size() &&
           (used[slot].contains(e.u) || used[slot].contains(e.v))) {
      ++slot;
    }
    if (slot == matchings.size()) {
      matchings.emplace_back();
      used.emplace_back();
    }
    matchings[slot].edges.push_back(e);
    used[slot].insert(e.u);
    used[slot].insert(e.v);
  }
  for (Matching& m : matchings) std::sort(m.edges.begin(), m.edges.end());
  return matchings;
}

CompressedEdge CompressedEdge::fresh(const Edge& e, int num_qubits) {
  CompressedEdge c;
  c.u = std::min(e.u, e.v);
  c.v = std::max(e.u, e.v);
  c.active.resize(static_cast<std::size_t>(num_qubits));
  std::iota(c.active.begin(), c.active.end(), 0);
  c.mask = e.u ^ e.v;
  return c;
}

Label delete_bit(Label x, int k) {
  const Label low = x & ((Label{1} << k) - 1);
  return ((x >> (k + 1)) << k) | low;
}

Label insert_bit(Label x, int k, bool bit) {
  const Label low = x & ((Label{1} << k) - 1);
  return ((x >> k) << (k + 1)) | (static_cast<Label>(bit) << k) | low;
}

std::optional<int> mergeable_at(const CompressedEdge& a, const CompressedEdge& b) {
  if (a.mask != b.mask || a.active != b.active ||
      a.weight_reducing != b.weight_reducing) {
    return std::nullopt;
  }
  for (int p = 0; p < a.width(); ++p) {
    const Label bit = Label{1} << p;
    const bool straight = (a.u ^ b.u) == bit && (a.v ^ b.v) == bit;
    const bool crossed = (a.u ^ b.v) == bit && (a.v ^ b.u) == bit;
    if (straight || crossed) return p;
  }
  return std::nullopt;
}

CompressedEdge merge_at(const CompressedEdge& e, int p) {
  if (p < 0 || p >= e.width()) {
    throw std::out_of_range("merge_at: position outside the active list");
  }
  CompressedEdge out;
  const Label u = delete_bit(e.u, p);
  const Label v = delete_bit(e.v, p);
  out.u = std::min(u, v);
  out.v = std::max(u, v);
  out.active = e.active;
  const int removed = out.active[static_cast<std::size_t>(p)];
  out.active.erase(out.active.begin() + p);
  out.weight_reducing = e.weight_reducing;
  if ((e.mask >> removed) & 1U) out.weight_reducing.push_back(removed);
  out.mask = e.mask;
  return out;
}

namespace {

bool scan_order(const CompressedEdge& a, const CompressedEdge& b) {
  return std::tie(a.mask, a.active, a.weight_reducing, a.u, a.v) <
         std::tie(b.mask, b.active, b.weight_reducing, b.u, b.v);
}

}  // namespace

std::vector<CompressedEdge> compress_matching(const Matching& m, int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("compress_matching: bad qubit count");
  }
  if (!m.is_valid()) {
    throw std::invalid_argument("compress_matching: edges share a vertex");
  }
  std::vector<CompressedEdge> work;
  work.reserve(m.edges.size());
  for (const Edge& e : m.edges) work.push_back(CompressedEdge::fresh(e, num_qubits));
  std::sort(work.begin(), work.end(), scan_order);

  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < work.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
        const auto p = mergeable_at(work[i], work[j]);
        if (!p) continue;
        const std::size_t before = work.size();
        CompressedEdge combined = merge_at(work[i], *p);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        work.insert(std::upper_bound(work.begin(), work.end(), combined,
                                     scan_order),
                    std::move(combined));
        if (work.size() >= before) {
          throw std::logic_error("compress_matching: merge did not shrink");
        }
        merged = true;
      }
    }
  }
  return work;
}

std::vector<Edge> expand_edge(const CompressedEdge& e, int num_qubits) {
  if (e.width() > num_qubits) {
    throw std::invalid_argument("expand_edge: more active qubits than n");
  }
  for (int a : e.active) {
    if (a < 0 || a >= num_qubits) {
      throw std::out_of_range("expand_edge: active qubit " + std::to_string(a) +
                              " outside register of " +
                              std::to_string(num_qubits));
    }
  }
  // Place compressed bit p at original position active[p].
  Label u_base = 0;
  Label v_base = 0;
  std::vector<char> is_active(static_cast<std::size_t>(num_qubits), 0);
  for (int p = 0; p < e.width(); ++p) {
    const int q = e.active[static_cast<std::size_t>(p)];
    is_active[static_cast<std::size_t>(q)] = 1;
    u_base |= ((e.u >> p) & 1U) << q;
    v_base |= ((e.v >> p) & 1U) << q;
  }
  std::vector<int> deleted;
  for (int q = 0; q < num_qubits; ++q) {
    if (!is_active[static_cast<std::size_t>(q)]) deleted.push_back(q);
  }

  std::vector<Edge> out;
  const std::uint64_t combos = std::uint64_t{1} << deleted.size();
  out.reserve(combos);
  for (std::uint64_t c = 0; c < combos; ++c) {
    Label u = u_base;
    Label v = v_base;
    for (std::size_t k = 0; k < deleted.size(); ++k) {
      const int q = deleted[k];
      const Label bit = (c >> k) & 1U;
      u |= bit << q;
      v |= (bit ^ ((e.mask >> q) & 1U)) << q;
    }
    out.push_back(Edge::canonical(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matchwalk
