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

inline constexpr Eigen::Index kDefaultMaxKronDim = 4096;

/// Kronecker product with the first factor on the most significant index
/// block, so kron(A, B)(i*q + k, j*q + l) = A(i, j) * B(k, l) for B of size
/// q x q. Throws SizeError when the result would exceed max_dim rows.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a,
          const Eigen::MatrixBase<DerivedB>& b,
          Eigen::Index max_dim = kDefaultMaxKronDim)
    -> Eigen::Matrix<decltype(typename DerivedA::Scalar() *
                              typename DerivedB::Scalar()),
                     Eigen::Dynamic, Eigen::Dynamic> {
  using Scalar =
      decltype(typename DerivedA::Scalar() * typename DerivedB::Scalar());
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw SizeError("kron: result dimension " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds limit " +
                    std::to_string(max_dim));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of a vector pair, first factor most significant:
/// kron_vec(u, v)(i*q + k) = u(i) * v(k).
template <typename DerivedA, typename DerivedB>
auto kron_vec(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b)
    -> Eigen::Matrix<decltype(typename DerivedA::Scalar() *
                              typename DerivedB::Scalar()),
                     Eigen::Dynamic, 1> {
  using Scalar =
      decltype(typename DerivedA::Scalar() * typename DerivedB::Scalar());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Square complex matrix validated to be Hermitian on construction.
/// The payload is immutable; read access goes through matrix().
class DenseHermitian {
 public:
  explicit DenseHermitian(Cmat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw ShapeError("DenseHermitian: matrix is " +
                       std::to_string(m_.rows()) + "x" +
                       std::to_string(m_.cols()) + ", expected square");
    }
    const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::kHermitian) {
      throw ContractError(
          "DenseHermitian: max |M - M^dag| = " + std::to_string(dev));
    }
  }

  /// Skips the Hermiticity check; for internal call sites that construct the
  /// matrix symmetrically by design.
  struct Unchecked {};
  DenseHermitian(Cmat m, Unchecked) : m_(std::move(m)) {}

  const Cmat& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Cmat m_;
};

inline DenseHermitian kron(const DenseHermitian& a, const DenseHermitian& b,
                           Eigen::Index max_dim = kDefaultMaxKronDim) {
  return DenseHermitian(kron(a.matrix(), b.matrix(), max_dim),
                        DenseHermitian::Unchecked{});
}

}  // namespace bellvar
