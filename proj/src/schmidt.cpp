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

#include "bellvar/schmidt.hpp"

#include <algorithm>

#include "bellvar/dense.hpp"

namespace bellvar {

namespace {

using Vec2c = Eigen::Vector2cd;

/// e^{-i arg(component)} for the first component of magnitude above 1e-8;
/// unit vectors always have one.
Complex phase_fix_factor(const Vec2c& v) {
  const Complex pivot = std::abs(v(0)) > 1e-8 ? v(0) : v(1);
  return std::conj(pivot) / std::abs(pivot);
}

Vec2c orthogonal_completion(const Vec2c& v) {
  return Vec2c(-std::conj(v(1)), std::conj(v(0)));
}

/// Unit eigenvector of a 2x2 Hermitian matrix for the given eigenvalue,
/// chosen from the two null-space candidates of m - lambda by larger norm;
/// falls back to (1, 0) when m is a multiple of the identity.
Vec2c hermitian_2x2_eigenvector(const Mat2c& m, double lambda) {
  const Vec2c c1(-m(0, 1), m(0, 0) - Complex(lambda, 0.0));
  const Vec2c c2(Complex(lambda, 0.0) - m(1, 1), m(1, 0));
  const Vec2c best = c1.norm() >= c2.norm() ? c1 : c2;
  if (best.norm() <= 1e-14) {
    return Vec2c(1.0, 0.0);
  }
  return best / best.norm();
}

}  // namespace

SchmidtForm schmidt_decompose(const StateVector& psi) {
  if (psi.n() != 2) {
    throw ShapeError("schmidt_decompose: state has n = " +
                     std::to_string(psi.n()) + ", expected 2");
  }
  // Amplitude matrix c(i, j) = <i j | psi>, qubit 1 on rows.
  Mat2c c;
  c << psi.amps()(0), psi.amps()(1), psi.amps()(2), psi.amps()(3);

  const Mat2c gram = c.adjoint() * c;
  const double trace = gram.trace().real();
  const double det = std::max(0.0, (gram(0, 0) * gram(1, 1) -
                                    gram(0, 1) * gram(1, 0))
                                       .real());
  const double disc = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));
  const double s0 = std::sqrt(0.5 * (trace + disc));
  const double s1 = std::sqrt(std::max(0.0, 0.5 * (trace - disc)));
  const double theta = std::asin(std::clamp(s1, 0.0, std::sqrt(0.5)));

  // Right Schmidt vectors are eigenvectors of the Gram matrix; the left
  // ones follow as c v / s. The larger singular value always satisfies
  // s0 >= 1/sqrt(2) for a normalized state, so that division is safe.
  Vec2c v0 = hermitian_2x2_eigenvector(gram, 0.5 * (trace + disc));
  Vec2c v1 = orthogonal_completion(v0);

  Vec2c u0 = c * v0 / s0;
  u0.normalize();
  const Complex fix0 = phase_fix_factor(u0);
  u0 *= fix0;
  v0 *= fix0;

  Vec2c u1 = orthogonal_completion(u0);
  const Complex fix1 = phase_fix_factor(u1);
  u1 *= fix1;
  // Align the phase of v1 so that c v1 = s1 u1 holds with the fixed u1;
  // immaterial (and skipped) when the second coefficient vanishes.
  const Complex z = u1.dot(c * v1);
  if (std::abs(z) > 1e-12) {
    v1 *= std::conj(z) / std::abs(z);
  }

  SchmidtForm out{
      theta, Mat2c(), Mat2c(),
      StateVector(2, [&] {
        Cvec amps = Cvec::Zero(4);
        amps(0) = Complex(std::cos(theta), 0.0);
        amps(3) = quarter_phase() * std::sin(theta);
        return amps;
      }())};
  out.u1.col(0) = u0;
  out.u1.col(1) = u1;
  out.u2.col(0) = v0.conjugate();
  out.u2.col(1) = std::conj(quarter_phase()) * v1.conjugate();

  const Cvec reconstructed =
      kron(out.u1, out.u2) * out.canonical_state.amps();
  const double fidelity = std::abs(Complex(psi.amps().dot(reconstructed)));
  if (fidelity < 1.0 - 1e-10) {
    throw NumericalError("schmidt_decompose: reconstruction fidelity " +
                         std::to_string(fidelity));
  }
  return out;
}

}  // namespace bellvar
