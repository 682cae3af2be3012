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

#include "bellvar/observables.hpp"

namespace bellvar {

namespace {

Mat2c pauli_matrix(Pauli p) {
  Mat2c m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

SpinObservable::SpinObservable(const Vec3& axis) : axis_(axis) {
  const double dev = std::abs(axis_.norm() - 1.0);
  if (!axis_.allFinite() || dev > tol::kUnitAxis) {
    throw ContractError("SpinObservable: |axis norm - 1| = " +
                        std::to_string(dev));
  }
}

Mat2c SpinObservable::matrix() const {
  return axis_(0) * pauli_matrix(Pauli::X) + axis_(1) * pauli_matrix(Pauli::Y) +
         axis_(2) * pauli_matrix(Pauli::Z);
}

PauliSum SpinObservable::embed(int n, int site) const {
  PauliSum out(n);
  out.add(PauliString::single(n, site, Pauli::X), axis_(0));
  out.add(PauliString::single(n, site, Pauli::Y), axis_(1));
  out.add(PauliString::single(n, site, Pauli::Z), axis_(2));
  return out;
}

SpinObservable spin_observable(const Vec3& axis) {
  return SpinObservable(axis);
}

SpinObservable cross_observable(const SpinObservable& a,
                                const SpinObservable& b) {
  const double overlap = std::abs(a.axis().dot(b.axis()));
  if (overlap > tol::kOrthogonalAxis) {
    throw ContractError(
        "cross_observable: axes must be orthogonal, |a . b| = " +
        std::to_string(overlap));
  }
  return SpinObservable(a.axis().cross(b.axis()));
}

Eigen::Matrix3d bloch_rotation(const Mat2c& u) {
  const double unitary_dev =
      (u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff();
  if (unitary_dev > 1e-10) {
    throw ContractError("bloch_rotation: matrix is not unitary, residual " +
                        std::to_string(unitary_dev));
  }
  Eigen::Matrix3d r;
  const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      const Mat2c conj = u * pauli_matrix(axes[l]) * u.adjoint();
      r(k, l) = 0.5 * (pauli_matrix(axes[k]) * conj).trace().real();
    }
  }
  return r;
}

}  // namespace bellvar
