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

#include <string>
#include <string_view>
#include <vector>

#include "matchwalk/dense.hpp"

namespace matchwalk {

enum class GateKind { X, CX, Rx, Rz, H, SDG, S, MCRX };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

struct Control {
  int qubit = 0;
  bool value = true;

  bool operator==(const Control&) const = default;
};

/// One gate. Rotations use Rx(a) = exp(-i a X / 2), Rz(a) = exp(-i a Z / 2);
/// MCRX applies Rx(angle) to `target` when every control qubit holds its
/// control value.
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<Control> controls;
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, q, {}, 0.0}; }
  static Gate h(int q) { return {GateKind::H, q, {}, 0.0}; }
  static Gate s(int q) { return {GateKind::S, q, {}, 0.0}; }
  static Gate sdg(int q) { return {GateKind::SDG, q, {}, 0.0}; }
  static Gate rx(int q, double a) { return {GateKind::Rx, q, {}, a}; }
  static Gate rz(int q, double a) { return {GateKind::Rz, q, {}, a}; }
  static Gate cx(int control, int target) {
    return {GateKind::CX, target, {{control, true}}, 0.0};
  }
  static Gate mcrx(int target, std::vector<Control> controls, double a) {
    return {GateKind::MCRX, target, std::move(controls), a};
  }

  bool is_rotation() const {
    return kind == GateKind::Rx || kind == GateKind::Rz;
  }
  /// Target followed by control qubits.
  std::vector<int> qubits() const;
  /// Throws std::invalid_argument on duplicate qubits, a control on the
  /// target, or a control list that does not fit the kind.
  void validate() const;

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over a fixed register; gates[0] is applied first.
/// `global_phase` (radians) multiplies the whole circuit unitary.
class GateCircuit {
 public:
  GateCircuit() = default;
  explicit GateCircuit(int num_qubits) : num_qubits_(num_qubits) {}

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  double global_phase() const { return global_phase_; }

  /// Validates the gate and its qubit indices.
  void append(Gate g);
  void extend(const GateCircuit& other);
  void add_global_phase(double phase) { global_phase_ += phase; }

  bool is_lowered() const;

  bool operator==(const GateCircuit&) const = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

/// Product of the gate matrices in application order, times the global
/// phase. Throws NumericalGuardError beyond kMaxDenseQubits.
DenseOperator circuit_unitary(const GateCircuit& c);

/// Dense 2x2 matrix of a single-qubit gate kind.
Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle);

/// Lowers one MCRX to {X, CX, Rx, Rz, H}.
///
/// Zero-valued controls are conjugated with X. The all-ones core with k >= 1
/// controls is H-conjugated into a multiplexed Rz and synthesized along a
/// Gray code: 2^k Rz gates interleaved with 2^k CX gates. k = 0 gives a bare Rx.
GateCircuit synthesize_mcrx(const Gate& g, int num_qubits);

/// Replaces every MCRX with its synthesis; other gates are copied.
GateCircuit lower_circuit(const GateCircuit& c);

/// Local rewriting to a fixed point. Two gates are adjacent when no gate
/// between them touches any of their qubits. Rules: CX-CX on the same
/// (control, target), X-X, H-H and S-SDG cancel; same-axis rotations on one
/// qubit merge; rotations with angle = 0 mod 2pi are dropped (a -1 factor
/// goes to the global phase).
GateCircuit peephole_optimize(const GateCircuit& c);

/// Number of CX gates. Throws std::invalid_argument if an MCRX is present.
std::size_t cx_count(const GateCircuit& c);

/// Greedy ASAP layering: each gate lands one layer after the latest gate
/// that shares a qubit with it.
std::size_t depth(const GateCircuit& c);

/// One gate per line, e.g. "cx 1 0" or "mcrx 2 [1=1,0=0] 0.5".
std::string to_text(const GateCircuit& c);

}  // namespace matchwalk
