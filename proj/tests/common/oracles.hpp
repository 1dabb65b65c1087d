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

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the library's own numerics, so agreement
// with it is meaningful.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "matchwalk/circuit.hpp"
#include "matchwalk/datasets.hpp"
#include "matchwalk/graph.hpp"
#include "matchwalk/matching.hpp"

namespace matchwalk::oracle {

using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat pauli_x() {
  Mat x = Mat::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

/// 1-qubit operator `op` on qubit q of an n-qubit register via Kronecker
/// products (qubit n-1 is the leftmost factor).
inline Mat on_qubit(const Mat& op, int q, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    out = kron(out, k == q ? op : Mat::Identity(2, 2));
  }
  return out;
}

/// Sum of X_i over all qubits, built from Kronecker products.
inline Mat sum_x(int n) {
  const auto dim = Eigen::Index{1} << n;
  Mat out = Mat::Zero(dim, dim);
  for (int q = 0; q < n; ++q) out += on_qubit(pauli_x(), q, n);
  return out;
}

/// Adjacency matrix filled directly from an edge list.
inline Mat adjacency(const std::vector<Edge>& edges, int n) {
  const auto dim = Eigen::Index{1} << n;
  Mat a = Mat::Zero(dim, dim);
  for (const Edge& e : edges) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

/// exp(-i t A) by scaling and squaring of a truncated Taylor series. Does not
/// use an eigendecomposition, so it is independent of exact_evolution.
inline Mat expm_taylor(const Mat& a, double t) {
  const Mat m = Complex(0.0, -t) * a;
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const Mat s = m / std::ldexp(1.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * s / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Frobenius norm of the difference, no phase alignment.
inline double frob(const Mat& a, const Mat& b) { return (a - b).norm(); }

/// True when BFS from vertex 0 reaches all 2^n vertices.
inline bool bfs_connected(const std::vector<Edge>& edges, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::vector<Label>> adj(dim);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(dim, 0);
  std::queue<Label> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const Label x = q.front();
    q.pop();
    for (Label y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        q.push(y);
      }
    }
  }
  return count == dim;
}

/// Random matching on n qubits with up to `max_edges` edges, built by pairing
/// a shuffled vertex list.
inline Matching random_matching(Rng& rng, int n, std::size_t max_edges) {
  std::vector<Label> verts(std::size_t{1} << n);
  for (Label x = 0; x < verts.size(); ++x) verts[x] = x;
  rng.shuffle(verts);
  const std::size_t limit = std::min(max_edges, verts.size() / 2);
  const std::size_t k = limit == 0 ? 0 : 1 + rng.below(limit);
  Matching m;
  for (std::size_t i = 0; i < k; ++i) {
    m.edges.push_back(Edge::canonical(verts[2 * i], verts[2 * i + 1]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

/// Random simple graph on n qubits with edge probability p.
inline LabeledGraph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  const Label dim = Label{1} << n;
  for (Label a = 0; a < dim; ++a) {
    for (Label b = a + 1; b < dim; ++b) {
      if (rng.uniform01() < p) edges.push_back({a, b});
    }
  }
  return LabeledGraph(n, std::move(edges));
}

/// Random circuit over all gate kinds, with angles drawn from a small set that
/// includes multiples of pi/2 so that the optimizer's drop rule is exercised.
inline GateCircuit random_circuit(Rng& rng, int n, std::size_t length,
                                  bool allow_mcrx) {
  static const double kAngles[] = {0.3, -1.1, M_PI / 2, M_PI, 2 * M_PI, -M_PI};
  GateCircuit c(n);
  for (std::size_t i = 0; i < length; ++i) {
    const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const double a = kAngles[rng.below(6)];
    switch (rng.below(allow_mcrx ? 8 : 7)) {
      case 0:
        c.append(Gate::x(q));
        break;
      case 1:
        c.append(Gate::h(q));
        break;
      case 2:
        c.append(Gate::rx(q, a));
        break;
      case 3:
        c.append(Gate::rz(q, a));
        break;
      case 4:
        c.append(Gate::s(q));
        break;
      case 5:
        c.append(Gate::sdg(q));
        break;
      case 6: {
        if (n < 2) break;
        int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (t >= q) ++t;
        c.append(Gate::cx(q, t));
        // Repeat the CX often so the cancellation rule fires.
        if (rng.bernoulli(0.4)) c.append(Gate::cx(q, t));
        break;
      }
      default: {
        std::vector<Control> ctl;
        for (int k = 0; k < n; ++k) {
          if (k != q && rng.bernoulli(0.5)) ctl.push_back({k, rng.bernoulli(0.5)});
        }
        c.append(Gate::mcrx(q, std::move(ctl), a));
      }
    }
  }
  return c;
}

/// Dense unitary of a controlled Rx with arbitrary control values, built
/// entrywise from the definition.
inline Mat ideal_mcrx(int target, const std::vector<Control>& controls,
                      double angle, int n) {
  const auto dim = Eigen::Index{1} << n;
  Mat u = Mat::Identity(dim, dim);
  const double c = std::cos(angle / 2);
  const Complex s(0.0, -std::sin(angle / 2));
  for (Eigen::Index x = 0; x < dim; ++x) {
    bool on = true;
    for (const Control& ctl : controls) {
      if (((x >> ctl.qubit) & 1) != (ctl.value ? 1 : 0)) on = false;
    }
    if (!on || ((x >> target) & 1)) continue;
    const Eigen::Index y = x | (Eigen::Index{1} << target);
    u(x, x) = c;
    u(y, y) = c;
    u(x, y) = s;
    u(y, x) = s;
  }
  return u;
}

}  // namespace matchwalk::oracle
