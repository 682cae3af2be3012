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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bellvar {

using Complex = std::complex<double>;

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Cmat = ComplexMatrix<double>;
using Cvec = ComplexVector<double>;
using Rmat = RealMatrix<double>;
using Rvec = RealVector<double>;
using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;

inline constexpr double kPi = 3.14159265358979323846;

/// Fixed phase used by the canonical two-amplitude states; exp(i*pi/4).
inline Complex quarter_phase() {
  return Complex(std::sqrt(0.5), std::sqrt(0.5));
}

namespace tol {
inline constexpr double kHermitian = 1e-12;       // elementwise |M - M^dag|
inline constexpr double kStateNorm = 1e-10;       // |norm^2 - 1| for physical states
inline constexpr double kTrace = 1e-10;           // |tr(rho) - 1|
inline constexpr double kPsd = 1e-10;             // eigenvalue floor for rho
inline constexpr double kCoeffPrune = 1e-15;      // Pauli-sum term pruning
inline constexpr double kRealCoeff = 1e-12;       // Hermiticity of Pauli sums
inline constexpr double kImagResidue = 1e-10;     // expectation imaginary part
inline constexpr double kUnitAxis = 1e-10;        // Bloch vector norm
inline constexpr double kOrthogonalAxis = 1e-10;  // A perp A' requirement
inline constexpr double kSpectrumOrtho = 1e-9;    // eigenvector orthonormality
inline constexpr double kSpectrumResidual = 1e-9; // ||M - V L V^dag||_max
inline constexpr double kJacobiOffDiag = 1e-12;   // relative off-diagonal stop
inline constexpr double kSpectralVerify = 1e-12;  // rank-2 decomposition residual
inline constexpr double kSchmidtEntangled = 1e-8; // Schmidt angle floor for witness
inline constexpr double kViolationSlack = 1e-7;   // margin above separable bound
}  // namespace tol

namespace limits {
inline constexpr int kDenseQubits = 12;      // dense matrices up to 2^12 x 2^12
inline constexpr int kStructuredQubits = 20; // string application / expectations
inline constexpr int kLhvQubits = 8;         // 8^n assignment enumeration
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace limits

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical content of an argument failed
/// (non-Hermitian matrix, non-unit Bloch vector, unnormalized state, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the defined parameter domain (n < 2, theta out of
/// range, bad configuration value).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested object exceeds a configured size limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of two arguments do not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A numerical consistency check failed (imaginary residue too large,
/// iteration did not converge).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The witness was asked to certify a state with no entanglement.
class NotEntangledError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structured input (JSON state, Pauli-sum text) violates its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellvar
