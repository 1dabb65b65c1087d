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
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "matchwalk/compilers.hpp"

namespace matchwalk {

void TrotterPlan::validate(std::size_t num_terms) const {
  if (steps < 1) throw std::invalid_argument("TrotterPlan: steps must be >= 1");
  if (term_order.empty()) return;
  std::vector<std::size_t> sorted = term_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(num_terms);
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  if (sorted != expected) {
    throw std::invalid_argument(
        "TrotterPlan: term_order is not a permutation of the terms");
  }
}

namespace {

std::vector<std::size_t> resolved_order(const TrotterPlan& plan,
                                        std::size_t num_terms) {
  plan.validate(num_terms);
  if (!plan.term_order.empty()) return plan.term_order;
  std::vector<std::size_t> order(num_terms);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

int target_position(const CompressedEdge& e) {
  const Label diff = e.u ^ e.v;
  if (diff == 0) throw std::invalid_argument("compressed edge has u == v");
  return std::countr_zero(diff);
}

GateCircuit edge_circuit(const CompressedEdge& e, double angle, int num_qubits) {
  for (int a : e.active) {
    if (a < 0 || a >= num_qubits) {
      throw std::out_of_range("edge_circuit: active qubit outside register");
    }
  }
  const int p_target = target_position(e);
  if (p_target >= e.width()) {
    throw std::invalid_argument("edge_circuit: labels wider than active list");
  }
  const int target = e.active[static_cast<std::size_t>(p_target)];
  const Label diff = e.u ^ e.v;
  const bool u_target_bit = (e.u >> p_target) & 1U;

  std::vector<int> basis_targets = e.weight_reducing;
  std::vector<Control> controls;
  for (int p = 0; p < e.width(); ++p) {
    if (p == p_target) continue;
    const int q = e.active[static_cast<std::size_t>(p)];
    const bool u_bit = (e.u >> p) & 1U;
    if ((diff >> p) & 1U) {
      // After CX(target -> q) both endpoints carry u_p xor u_target here.
      basis_targets.push_back(q);
      controls.push_back({q, u_bit != u_target_bit});
    } else {
      controls.push_back({q, u_bit});
    }
  }

  GateCircuit c(num_qubits);
  for (int w : basis_targets) c.append(Gate::cx(target, w));
  c.append(Gate::mcrx(target, std::move(controls), 2.0 * angle));
  for (auto it = basis_targets.rbegin(); it != basis_targets.rend(); ++it) {
    c.append(Gate::cx(target, *it));
  }
  return c;
}

GateCircuit matching_circuit(const Matching& m, double angle, int num_qubits) {
  GateCircuit c(num_qubits);
  for (const CompressedEdge& e : compress_matching(m, num_qubits)) {
    c.extend(edge_circuit(e, angle, num_qubits));
  }
  return c;
}

GateCircuit matching_circuit_uncompressed(const Matching& m, double angle,
                                          int num_qubits) {
  if (!m.is_valid()) {
    throw std::invalid_argument("matching_circuit: edges share a vertex");
  }
  GateCircuit c(num_qubits);
  for (const Edge& e : m.edges) {
    c.extend(edge_circuit(CompressedEdge::fresh(e, num_qubits), angle, num_qubits));
  }
  return c;
}

GateCircuit compile_matching_trotter(const LabeledGraph& g,
                                     const TrotterPlan& plan,
                                     const DecomposeOptions& options) {
  const auto matchings = greedy_matching_decompose(g, options);
  const auto order = resolved_order(plan, matchings.size());
  const double angle = plan.time / static_cast<double>(plan.steps);
  const int n = g.num_qubits();

  std::vector<GateCircuit> pieces;
  pieces.reserve(matchings.size());
  for (const Matching& m : matchings) pieces.push_back(matching_circuit(m, angle, n));

  GateCircuit c(n);
  for (int s = 0; s < plan.steps; ++s) {
    for (std::size_t idx : order) c.extend(pieces[idx]);
  }
  return c;
}

}  // namespace matchwalk
