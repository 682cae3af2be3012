// Copyright 2026 The bellvar Authors
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

#include <utility>

#include "bellvar/common.hpp"

namespace bellvar {

/// Pure state of n qubits as 2^n amplitudes in the computational basis.
/// Qubit 1 is the most significant bit of the basis index: for basis index k,
/// qubit j (1-based) reads bit (n - j) of k.
class StateVector {
 public:
  StateVector(int n, Cvec amps) : n_(n), amps_(std::move(amps)) {
    if (n_ < 1) {
      throw DomainError("StateVector: n = " + std::to_string(n_) +
                        ", expected n >= 1");
    }
    const Eigen::Index want = Eigen::Index(1) << n_;
    if (amps_.size() != want) {
      throw ShapeError("StateVector: " + std::to_string(amps_.size()) +
                       " amplitudes for n = " + std::to_string(n_) +
                       ", expected " + std::to_string(want));
    }
    const double dev = std::abs(amps_.squaredNorm() - 1.0);
    if (dev > tol::kStateNorm) {
      throw ContractError("StateVector: |norm^2 - 1| = " +
                          std::to_string(dev));
    }
  }

  /// Basis state |k> of n qubits.
  static StateVector basis(int n, Eigen::Index k) {
    if (n < 1) {
      throw DomainError("StateVector::basis: n = " + std::to_string(n));
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (k < 0 || k >= dim) {
      throw DomainError("StateVector::basis: index " + std::to_string(k) +
                        " out of range for n = " + std::to_string(n));
    }
    Cvec amps = Cvec::Zero(dim);
    amps(k) = Complex(1.0, 0.0);
    return StateVector(n, std::move(amps));
  }

  int n() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Cvec& amps() const { return amps_; }

 private:
  int n_;
  Cvec amps_;
};

/// Density matrix of n qubits; validated Hermitian, unit trace, and positive
/// semidefinite on construction.
class DensityMatrix {
 public:
  DensityMatrix(int n, Cmat rho) : n_(n), rho_(std::move(rho)) {
    const Eigen::Index want = Eigen::Index(1) << n_;
    if (n_ < 1 || rho_.rows() != want || rho_.cols() != want) {
      throw ShapeError("DensityMatrix: matrix is " +
                       std::to_string(rho_.rows()) + "x" +
                       std::to_string(rho_.cols()) + " for n = " +
                       std::to_string(n_));
    }
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kHermitian) {
      throw ContractError("DensityMatrix: max |rho - rho^dag| = " +
                          std::to_string(herm));
    }
    const double tr_dev = std::abs(rho_.trace() - Complex(1.0, 0.0));
    if (tr_dev > tol::kTrace) {
      throw ContractError("DensityMatrix: |tr(rho) - 1| = " +
                          std::to_string(tr_dev));
    }
    // Cholesky of rho + eps*I certifies eigenvalues >= -eps.
    Cmat shifted = rho_;
    shifted.diagonal().array() += tol::kPsd;
    Eigen::LLT<Cmat> llt(shifted);
    if (llt.info() != Eigen::Success) {
      throw ContractError("DensityMatrix: not positive semidefinite");
    }
  }

  static DensityMatrix from_state(const StateVector& psi) {
    Cmat rho = psi.amps() * psi.amps().adjoint();
    return DensityMatrix(psi.n(), std::move(rho));
  }

  int n() const { return n_; }
  Eigen::Index dim() const { return rho_.rows(); }
  const Cmat& matrix() const { return rho_; }

 private:
  int n_;
  Cmat rho_;
};

}  // namespace bellvar
