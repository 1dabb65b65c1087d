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

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "matchwalk/circuit.hpp"

namespace matchwalk {

namespace {

std::uint64_t gray(std::uint64_t j) { return j ^ (j >> 1); }

// Largest number of controls we are willing to expand (2^k CX gates).
constexpr std::size_t kMaxSynthControls = 20;

}  // namespace

GateCircuit synthesize_mcrx(const Gate& g, int num_qubits) {
  if (g.kind != GateKind::MCRX) {
    throw std::invalid_argument("synthesize_mcrx: gate is not an MCRX");
  }
  g.validate();
  const std::size_t k = g.controls.size();
  if (k > kMaxSynthControls) {
    throw std::invalid_argument("synthesize_mcrx: too many controls");
  }
  GateCircuit out(num_qubits);
  if (k == 0) {
    out.append(Gate::rx(g.target, g.angle));
    return out;
  }

  for (const Control& c : g.controls) {
    if (!c.value) out.append(Gate::x(c.qubit));
  }

  // H Rz H = Rx on the target. A multiplexed Rz with angle a_c on control
  // state c is realised by Rz(phi_j) steps separated by CX gates that walk
  // the Gray code g_0, g_1, ...; step j sees the target flipped by the
  // parity of c & g_j, so a_c = sum_j (-1)^{c.g_j} phi_j. With a = theta on
  // the all-ones state only, phi_j = theta (-1)^{|g_j|} / 2^k.
  const std::uint64_t steps = std::uint64_t{1} << k;
  const double scale = g.angle / static_cast<double>(steps);
  out.append(Gate::h(g.target));
  for (std::uint64_t j = 0; j < steps; ++j) {
    const std::uint64_t code = gray(j);
    const double sign = (std::popcount(code) % 2 == 0) ? 1.0 : -1.0;
    out.append(Gate::rz(g.target, sign * scale));
    const std::uint64_t next = gray((j + 1) % steps);
    const int flipped = std::countr_zero(code ^ next);
    out.append(Gate::cx(g.controls[static_cast<std::size_t>(flipped)].qubit,
                        g.target));
  }
  out.append(Gate::h(g.target));

  for (const Control& c : g.controls) {
    if (!c.value) out.append(Gate::x(c.qubit));
  }
  return out;
}

GateCircuit lower_circuit(const GateCircuit& c) {
  GateCircuit out(c.num_qubits());
  out.add_global_phase(c.global_phase());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::MCRX) {
      out.extend(synthesize_mcrx(g, c.num_qubits()));
    } else {
      out.append(g);
    }
  }
  return out;
}

}  // namespace matchwalk
