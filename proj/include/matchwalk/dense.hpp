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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace matchwalk {

using Complex = std::complex<double>;

/// Dense 2^n x 2^n complex operator in double precision.
using DenseOperator = Eigen::MatrixXcd;

/// Operators beyond 2^kMaxDenseQubits rows are refused.
inline constexpr int kMaxDenseQubits = 12;

/// Throws NumericalGuardError when a 2^n-dimensional operator is not allowed.
void check_dense_qubits(int num_qubits);

/// exp(-i t A) for real symmetric A, computed from the eigendecomposition of A.
/// Throws std::invalid_argument when A is not real symmetric.
DenseOperator exact_evolution(const DenseOperator& a, double t);

/// ||U - V||_2: the largest singular value of the difference.
double spectral_norm_diff(const DenseOperator& u, const DenseOperator& v);

/// ||AB - BA||_2.
double commutator_norm(const DenseOperator& a, const DenseOperator& b);

/// Frobenius distance after removing the relative global phase. The phase is
/// fixed by the largest-magnitude entry of `reference`.
double phase_aligned_distance(const DenseOperator& reference,
                              const DenseOperator& other);

bool is_unitary(const DenseOperator& u, double tol = 1e-12);

/// U^k by repeated squaring.
DenseOperator matrix_power(const DenseOperator& u, std::uint64_t k);

}  // namespace matchwalk
