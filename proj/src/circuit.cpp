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
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "matchwalk/circuit.hpp"
#include "matchwalk/errors.hpp"

namespace matchwalk {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "x";
    case GateKind::CX:
      return "cx";
    case GateKind::Rx:
      return "rx";
    case GateKind::Rz:
      return "rz";
    case GateKind::H:
      return "h";
    case GateKind::SDG:
      return "sdg";
    case GateKind::S:
      return "s";
    case GateKind::MCRX:
      return "mcrx";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  for (GateKind k : {GateKind::X, GateKind::CX, GateKind::Rx, GateKind::Rz,
                     GateKind::H, GateKind::SDG, GateKind::S, GateKind::MCRX}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::vector<int> Gate::qubits() const {
  std::vector<int> qs{target};
  for (const Control& c : controls) qs.push_back(c.qubit);
  return qs;
}

void Gate::validate() const {
  if (kind == GateKind::CX) {
    if (controls.size() != 1 || !controls[0].value) {
      throw std::invalid_argument("CX needs exactly one control with value 1");
    }
  } else if (kind != GateKind::MCRX && !controls.empty()) {
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " gate cannot carry controls");
  }
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("gate angle is not finite");
  }
  auto qs = qubits();
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw std::invalid_argument("gate uses a qubit twice");
  }
  if (qs.front() < 0) throw std::invalid_argument("negative qubit index");
}

void GateCircuit::append(Gate g) {
  g.validate();
  for (int q : g.qubits()) {
    if (q >= num_qubits_) {
      throw std::out_of_range("gate on qubit " + std::to_string(q) +
                              " in a " + std::to_string(num_qubits_) +
                              "-qubit circuit");
    }
  }
  gates_.push_back(std::move(g));
}

void GateCircuit::extend(const GateCircuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw std::out_of_range("extend: circuit is wider than the target");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
}

bool GateCircuit::is_lowered() const {
  return std::none_of(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind == GateKind::MCRX;
  });
}

Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  switch (kind) {
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      break;
    }
    case GateKind::S:
      m << 1.0, 0.0, 0.0, 1i;
      break;
    case GateKind::SDG:
      m << 1.0, 0.0, 0.0, -1i;
      break;
    case GateKind::Rx:
    case GateKind::MCRX:
      m << c, -1i * s, -1i * s, c;
      break;
    case GateKind::Rz:
      m << std::exp(-0.5i * angle), 0.0, 0.0, std::exp(0.5i * angle);
      break;
    case GateKind::CX:
      throw std::invalid_argument("CX is not a single-qubit gate");
  }
  return m;
}

DenseOperator circuit_unitary(const GateCircuit& c) {
  check_dense_qubits(c.num_qubits());
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << c.num_qubits());
  DenseOperator u = DenseOperator::Identity(dim, dim);

  // Gates act on the rows of U; every column is an independent state.
  for (const Gate& g : c.gates()) {
    const auto tbit = static_cast<Eigen::Index>(std::uint64_t{1} << g.target);
    std::uint64_t cmask = 0;
    std::uint64_t cval = 0;
    for (const Control& ctl : g.controls) {
      cmask |= std::uint64_t{1} << ctl.qubit;
      if (ctl.value) cval |= std::uint64_t{1} << ctl.qubit;
    }
    if (g.kind == GateKind::CX) {
      for (Eigen::Index r = 0; r < dim; ++r) {
        const auto ur = static_cast<std::uint64_t>(r);
        if ((r & tbit) || (ur & cmask) != cval) continue;
        u.row(r).swap(u.row(r | tbit));
      }
      continue;
    }
    const Eigen::Matrix2cd m = single_qubit_matrix(g.kind, g.angle);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      if ((r & tbit) || (ur & cmask) != cval) continue;
      const Eigen::Index r1 = r | tbit;
      for (Eigen::Index col = 0; col < dim; ++col) {
        const Complex a0 = u(r, col);
        const Complex a1 = u(r1, col);
        u(r, col) = m(0, 0) * a0 + m(0, 1) * a1;
        u(r1, col) = m(1, 0) * a0 + m(1, 1) * a1;
      }
    }
  }
  if (c.global_phase() != 0.0) {
    u *= std::polar(1.0, c.global_phase());
  }
  return u;
}

std::size_t cx_count(const GateCircuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::MCRX) {
      throw std::invalid_argument("cx_count: circuit contains unlowered MCRX");
    }
    if (g.kind == GateKind::CX) ++n;
  }
  return n;
}

std::size_t depth(const GateCircuit& c) {
  std::vector<std::size_t> level(static_cast<std::size_t>(c.num_qubits()), 0);
  std::size_t best = 0;
  for (const Gate& g : c.gates()) {
    std::size_t l = 0;
    for (int q : g.qubits()) l = std::max(l, level[static_cast<std::size_t>(q)]);
    ++l;
    for (int q : g.qubits()) level[static_cast<std::size_t>(q)] = l;
    best = std::max(best, l);
  }
  return best;
}

std::string to_text(const GateCircuit& c) {
  std::ostringstream out;
  out.precision(17);
  out << "# qubits " << c.num_qubits() << " gates " << c.size();
  if (c.global_phase() != 0.0) out << " phase " << c.global_phase();
  out << '\n';
  for (const Gate& g : c.gates()) {
    out << to_string(g.kind);
    if (g.kind == GateKind::CX) {
      out << ' ' << g.controls[0].qubit << ' ' << g.target;
    } else {
      out << ' ' << g.target;
    }
    if (g.kind == GateKind::MCRX) {
      out << " [";
      for (std::size_t i = 0; i < g.controls.size(); ++i) {
        if (i) out << ',';
        out << g.controls[i].qubit << '=' << (g.controls[i].value ? 1 : 0);
      }
      out << ']';
    }
    if (g.is_rotation() || g.kind == GateKind::MCRX) out << ' ' << g.angle;
    out << '\n';
  }
  return out.str();
}

}  // namespace matchwalk
