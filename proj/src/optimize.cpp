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
#include <cmath>
#include <numbers>
#include <optional>

#include "matchwalk/circuit.hpp"

namespace matchwalk {

namespace {

constexpr double kAngleTol = 1e-12;

// If `angle` is a multiple 2 pi m of a full turn, the rotation equals
// (-1)^m I; returns m.
std::optional<long long> full_turns(double angle) {
  const double turns = angle / (2.0 * std::numbers::pi);
  const double m = std::round(turns);
  if (std::abs(angle - m * 2.0 * std::numbers::pi) < kAngleTol) {
    return static_cast<long long>(m);
  }
  return std::nullopt;
}

bool cancels(const Gate& a, const Gate& b) {
  if (a.target != b.target) return false;
  switch (a.kind) {
    case GateKind::CX:
      return b.kind == GateKind::CX && a.controls == b.controls;
    case GateKind::X:
      return b.kind == GateKind::X;
    case GateKind::H:
      return b.kind == GateKind::H;
    case GateKind::S:
      return b.kind == GateKind::SDG;
    case GateKind::SDG:
      return b.kind == GateKind::S;
    default:
      return false;
  }
}

bool merges(const Gate& a, const Gate& b) {
  return a.is_rotation() && a.kind == b.kind && a.target == b.target;
}

// One left-to-right sweep. Each qubit keeps a stack of the live output gates
// that touch it, so "adjacent" means: the previous gate is on top of the
// stack of every qubit the incoming gate uses, and it uses the same qubits.
// Removing a gate pops it from those stacks, which lets cancellations cascade
// within the sweep.
bool sweep(const GateCircuit& in, GateCircuit& result) {
  const auto nq = static_cast<std::size_t>(in.num_qubits());
  std::vector<std::optional<Gate>> out;
  out.reserve(in.size());
  std::vector<std::vector<std::size_t>> stacks(nq);
  double phase = in.global_phase();
  bool changed = false;

  auto remove = [&](std::size_t idx) {
    for (int q : out[idx]->qubits()) stacks[static_cast<std::size_t>(q)].pop_back();
    out[idx].reset();
  };

  for (const Gate& g : in.gates()) {
    if (g.is_rotation()) {
      if (auto m = full_turns(g.angle)) {
        if (*m % 2 != 0) phase += std::numbers::pi;
        changed = true;
        continue;
      }
    }
    const std::vector<int> qs = g.qubits();
    std::optional<std::size_t> prev;
    bool aligned = g.kind != GateKind::MCRX;
    for (int q : qs) {
      const auto& st = stacks[static_cast<std::size_t>(q)];
      if (st.empty() || (prev && *prev != st.back())) {
        aligned = false;
        break;
      }
      prev = st.back();
    }
    if (aligned && prev) {
      Gate& before = *out[*prev];
      std::vector<int> bq = before.qubits();
      std::vector<int> gq = qs;
      std::sort(bq.begin(), bq.end());
      std::sort(gq.begin(), gq.end());
      if (bq == gq) {
        if (cancels(before, g)) {
          remove(*prev);
          changed = true;
          continue;
        }
        if (merges(before, g)) {
          before.angle += g.angle;
          if (auto m = full_turns(before.angle)) {
            if (*m % 2 != 0) phase += std::numbers::pi;
            remove(*prev);
          }
          changed = true;
          continue;
        }
      }
    }
    out.push_back(g);
    for (int q : qs) stacks[static_cast<std::size_t>(q)].push_back(out.size() - 1);
  }

  result = GateCircuit(in.num_qubits());
  result.add_global_phase(phase);
  for (auto& g : out) {
    if (g) result.append(std::move(*g));
  }
  return changed;
}

}  // namespace

GateCircuit peephole_optimize(const GateCircuit& c) {
  GateCircuit current = c;
  GateCircuit next;
  while (sweep(current, next)) current = std::move(next);
  return current;
}

}  // namespace matchwalk
