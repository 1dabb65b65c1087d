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
#include <cmath>
#include <stdexcept>
#include <string>

#include "matchwalk/compilers.hpp"
#include "matchwalk/errors.hpp"

namespace matchwalk {

namespace {

constexpr double kCoefficientTol = 1e-12;
constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// x/z bit masks of a word; word[n - 1 - q] acts on qubit q.
struct XZ {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

XZ to_xz(const std::string& word) {
  XZ out;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - i);
    switch (word[i]) {
      case 'I':
        break;
      case 'X':
        out.x |= bit;
        break;
      case 'Y':
        out.x |= bit;
        out.z |= bit;
        break;
      case 'Z':
        out.z |= bit;
        break;
      default:
        throw std::invalid_argument("Pauli word has letter '" +
                                    std::string(1, word[i]) + "'");
    }
  }
  return out;
}

// <j ^ x | P | j> = i^{|x & z|} (-1)^{|j & z|}.
Complex pauli_phase(const XZ& p, std::uint64_t j) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex ph = kIPow[std::popcount(p.x & p.z) % 4];
  if (std::popcount(j & p.z) % 2) ph = -ph;
  return ph;
}

}  // namespace

bool PauliTerm::is_identity() const {
  return std::all_of(word.begin(), word.end(), [](char c) { return c == 'I'; });
}

std::vector<PauliTerm> pauli_decompose(const DenseOperator& a, int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxPauliQubits) {
    throw NumericalGuardError("pauli_decompose: " + std::to_string(num_qubits) +
                              " qubits outside [1, " +
                              std::to_string(kMaxPauliQubits) + "]");
  }
  const auto dim = std::uint64_t{1} << num_qubits;
  if (static_cast<std::uint64_t>(a.rows()) != dim ||
      static_cast<std::uint64_t>(a.cols()) != dim) {
    throw std::invalid_argument("pauli_decompose: operator is not 2^n x 2^n");
  }
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 ||
      a.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("pauli_decompose: operator is not real symmetric");
  }

  std::vector<PauliTerm> terms;
  const std::uint64_t total = std::uint64_t{1} << (2 * num_qubits);
  std::string word(static_cast<std::size_t>(num_qubits), 'I');
  // Base-4 counting with the first letter most significant walks the words in
  // lexicographic I < X < Y < Z order.
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int i = 0; i < num_qubits; ++i) {
      const auto digit = (idx >> (2 * (num_qubits - 1 - i))) & 3U;
      word[static_cast<std::size_t>(i)] = kLetters[digit];
    }
    const XZ p = to_xz(word);
    // Tr(P^dagger A) = sum_j conj(<j^x|P|j>) A[j^x, j].
    Complex trace{0.0, 0.0};
    for (std::uint64_t j = 0; j < dim; ++j) {
      const Complex entry = a(static_cast<Eigen::Index>(j ^ p.x),
                              static_cast<Eigen::Index>(j));
      if (entry != Complex{0.0, 0.0}) trace += std::conj(pauli_phase(p, j)) * entry;
    }
    const Complex c = trace / static_cast<double>(dim);
    if (std::abs(c.imag()) > kCoefficientTol) {
      throw std::logic_error("pauli_decompose: complex coefficient for " + word);
    }
    if (std::abs(c.real()) > kCoefficientTol) terms.push_back({word, c.real()});
  }
  return terms;
}

DenseOperator pauli_matrix(const std::string& word) {
  const int n = static_cast<int>(word.size());
  check_dense_qubits(n);
  const XZ p = to_xz(word);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(dim); ++j) {
    m(static_cast<Eigen::Index>(j ^ p.x), static_cast<Eigen::Index>(j)) =
        pauli_phase(p, j);
  }
  return m;
}

DenseOperator pauli_sum(const std::vector<PauliTerm>& terms, int num_qubits) {
  check_dense_qubits(num_qubits);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const PauliTerm& t : terms) {
    if (static_cast<int>(t.word.size()) != num_qubits) {
      throw std::invalid_argument("pauli_sum: word width mismatch");
    }
    m += t.coefficient * pauli_matrix(t.word);
  }
  return m;
}

bool anticommute(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("anticommute: word width mismatch");
  }
  const XZ pa = to_xz(a);
  const XZ pb = to_xz(b);
  // Symplectic form.
  return (std::popcount(pa.x & pb.z) + std::popcount(pa.z & pb.x)) % 2 == 1;
}

GateCircuit pauli_evolution_circuit(const PauliTerm& term, double time,
                                    int num_qubits) {
  if (static_cast<int>(term.word.size()) != num_qubits) {
    throw std::invalid_argument("pauli_evolution_circuit: word width mismatch");
  }
  const XZ p = to_xz(term.word);
  GateCircuit c(num_qubits);
  if (term.is_identity()) {
    c.add_global_phase(-term.coefficient * time);
    return c;
  }
  std::vector<int> support;
  for (int q = 0; q < num_qubits; ++q) {
    if (((p.x | p.z) >> q) & 1U) support.push_back(q);
  }
  auto letter = [&](int q) { return term.word[static_cast<std::size_t>(num_qubits - 1 - q)]; };

  for (int q : support) {
    if (letter(q) == 'X') {
      c.append(Gate::h(q));
    } else if (letter(q) == 'Y') {
      c.append(Gate::sdg(q));
      c.append(Gate::h(q));
    }
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    c.append(Gate::cx(support[i], support[i + 1]));
  }
  c.append(Gate::rz(support.back(), 2.0 * term.coefficient * time));
  for (std::size_t i = support.size() - 1; i > 0; --i) {
    c.append(Gate::cx(support[i - 1], support[i]));
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    const int q = *it;
    if (letter(q) == 'X') {
      c.append(Gate::h(q));
    } else if (letter(q) == 'Y') {
      c.append(Gate::h(q));
      c.append(Gate::s(q));
    }
  }
  return c;
}

GateCircuit compile_pauli_trotter(const std::vector<PauliTerm>& terms,
                                  const TrotterPlan& plan, int num_qubits) {
  if (terms.empty()) {
    throw std::invalid_argument("compile_pauli_trotter: no terms");
  }
  plan.validate(terms.size());
  std::vector<std::size_t> order = plan.term_order;
  if (order.empty()) {
    order.resize(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  }
  const double dt = plan.time / static_cast<double>(plan.steps);
  std::vector<GateCircuit> pieces;
  pieces.reserve(terms.size());
  for (const PauliTerm& t : terms) {
    pieces.push_back(pauli_evolution_circuit(t, dt, num_qubits));
  }
  GateCircuit c(num_qubits);
  for (int s = 0; s < plan.steps; ++s) {
    for (std::size_t idx : order) c.extend(pieces[idx]);
  }
  return c;
}

}  // namespace matchwalk
