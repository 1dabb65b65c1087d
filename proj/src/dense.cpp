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

#include "matchwalk/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>
#include <string>

#include "matchwalk/errors.hpp"

namespace matchwalk {

namespace {

void check_same_shape(const DenseOperator& a, const DenseOperator& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
}

double largest_singular_value(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<DenseOperator> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

void check_dense_qubits(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxDenseQubits) {
    throw NumericalGuardError("dense operator on " + std::to_string(num_qubits) +
                              " qubits exceeds the " +
                              std::to_string(kMaxDenseQubits) + "-qubit cap");
  }
}

DenseOperator exact_evolution(const DenseOperator& a, double t) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("exact_evolution: operator is not square");
  }
  if (a.rows() > (Eigen::Index{1} << kMaxDenseQubits)) {
    throw NumericalGuardError("exact_evolution: dimension above cap");
  }
  const Eigen::MatrixXd re = a.real();
  if (a.imag().cwiseAbs().maxCoeff() > 1e-12 ||
      (re - re.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("exact_evolution: operator is not real symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(re);
  const Eigen::MatrixXd& v = eig.eigenvectors();
  Eigen::VectorXcd phases(v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    phases(i) = std::polar(1.0, -t * eig.eigenvalues()(i));
  }
  const DenseOperator vc = v.cast<Complex>();
  return vc * phases.asDiagonal() * vc.transpose();
}

double spectral_norm_diff(const DenseOperator& u, const DenseOperator& v) {
  check_same_shape(u, v, "spectral_norm_diff");
  return largest_singular_value(u - v);
}

double commutator_norm(const DenseOperator& a, const DenseOperator& b) {
  check_same_shape(a, b, "commutator_norm");
  return largest_singular_value(a * b - b * a);
}

double phase_aligned_distance(const DenseOperator& reference,
                              const DenseOperator& other) {
  check_same_shape(reference, other, "phase_aligned_distance");
  if (reference.size() == 0) return 0.0;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  reference.cwiseAbs().maxCoeff(&r, &c);
  const Complex a = reference(r, c);
  const Complex b = other(r, c);
  Complex phase{1.0, 0.0};
  if (std::abs(b) > 0.0) {
    phase = (a / std::abs(a)) / (b / std::abs(b));
  }
  return (reference - phase * other).norm();
}

bool is_unitary(const DenseOperator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const DenseOperator id = DenseOperator::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).norm() < tol * static_cast<double>(u.rows());
}

DenseOperator matrix_power(const DenseOperator& u, std::uint64_t k) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("matrix_power: operator is not square");
  }
  DenseOperator result = DenseOperator::Identity(u.rows(), u.cols());
  DenseOperator base = u;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace matchwalk
