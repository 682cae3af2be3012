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

#include <random>

#include <doctest.h>
#include <Eigen/Eigenvalues>

#include "bellvar/bell_ops.hpp"
#include "bellvar/dense.hpp"
#include "bellvar/eigensolver.hpp"
#include "oracles.hpp"

using bellvar::Cmat;
using bellvar::Complex;
using bellvar::Cvec;

TEST_CASE("kron basics") {
  const Cmat x = oracles::letter_matrix('X');
  const Cmat z = oracles::letter_matrix('Z');
  const Cmat xx = bellvar::kron(x, x);
  Cvec e00 = Cvec::Zero(4);
  e00(0) = 1.0;
  const Cvec out = xx * e00;
  CHECK(out(3) == Complex(1.0, 0.0));
  CHECK(out.head(3).cwiseAbs().maxCoeff() == 0.0);

  const Cmat zz = bellvar::kron(z, z);
  CHECK(zz(0, 0) == Complex(1.0, 0.0));
  CHECK(zz(1, 1) == Complex(-1.0, 0.0));
  CHECK(zz(2, 2) == Complex(-1.0, 0.0));
  CHECK(zz(3, 3) == Complex(1.0, 0.0));

  std::mt19937_64 gen(21);
  Cmat m(2, 2);
  m << Complex(0.3, 0.1), Complex(1.0, -2.0), Complex(1.0, 2.0),
      Complex(-0.5, 0.0);
  const Cmat im = bellvar::kron(Cmat::Identity(2, 2).eval(), m);
  CHECK((im.block(0, 0, 2, 2) - m).cwiseAbs().maxCoeff() == 0.0);
  CHECK((im.block(2, 2, 2, 2) - m).cwiseAbs().maxCoeff() == 0.0);
  CHECK(im.block(0, 2, 2, 2).cwiseAbs().maxCoeff() == 0.0);

  const Cmat a = oracles::random_state_vec(7, gen) *
                 oracles::random_state_vec(7, gen).adjoint();
  CHECK_THROWS_AS(bellvar::kron(a, a), bellvar::SizeError);
}

TEST_CASE("kron against the reference implementation") {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Cmat a = oracles::random_state_vec(2, gen) *
                   oracles::random_state_vec(2, gen).adjoint();
    const Cmat b = oracles::random_state_vec(3, gen) *
                   oracles::random_state_vec(3, gen).adjoint();
    CHECK((bellvar::kron(a, b) - oracles::kron(a, b)).cwiseAbs().maxCoeff() <
          1e-15);
  }
}

TEST_CASE("dense hermitian wrapper validates") {
  Cmat skew(2, 2);
  skew << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
      Complex(0.0, 0.0);
  CHECK_THROWS_AS(bellvar::DenseHermitian{skew}, bellvar::ContractError);
}

namespace {

Cmat random_hermitian(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Cmat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = Complex(normal(gen), normal(gen));
    }
  }
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

TEST_CASE("eigensolver matches the independent solver on random input") {
  std::mt19937_64 gen(23);
  for (int dim : {2, 3, 5, 8, 16, 33, 64}) {
    const Cmat m = random_hermitian(dim, gen);
    const bellvar::Spectrum spec = bellvar::hermitian_eigen(m);
    Eigen::SelfAdjointEigenSolver<Cmat> ref(m);
    REQUIRE(ref.info() == Eigen::Success);
    const double scale = std::max(1.0, ref.eigenvalues().cwiseAbs().maxCoeff());
    CHECK((spec.eigenvalues - ref.eigenvalues()).cwiseAbs().maxCoeff() <
          1e-10 * scale);

    // Ascending order, orthonormal columns, exact reconstruction.
    for (int k = 1; k < dim; ++k) {
      CHECK(spec.eigenvalues(k) >= spec.eigenvalues(k - 1));
    }
    const Cmat gram =
        spec.eigenvectors.adjoint() * spec.eigenvectors;
    CHECK((gram - Cmat::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-9);
    const Cmat rebuilt = spec.eigenvectors *
                         spec.eigenvalues.asDiagonal() *
                         spec.eigenvectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("eigensolver handles degenerate spectra") {
  std::mt19937_64 gen(24);
  const int dim = 16;
  // Rank-3 projector conjugated by a random basis: eigenvalues 0 and 1 only.
  Cmat basis(dim, dim);
  for (int c = 0; c < dim; ++c) {
    basis.col(c) = oracles::random_state_vec(4, gen);
  }
  const Eigen::HouseholderQR<Cmat> qr(basis);
  const Cmat q = qr.householderQ();
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  diag.tail(3).setOnes();
  const Cmat m = q * diag.asDiagonal() * q.adjoint();
  const bellvar::Spectrum spec = bellvar::hermitian_eigen(m);
  for (int k = 0; k < dim - 3; ++k) {
    CHECK(std::abs(spec.eigenvalues(k)) < 1e-10);
  }
  for (int k = dim - 3; k < dim; ++k) {
    CHECK(std::abs(spec.eigenvalues(k) - 1.0) < 1e-10);
  }
  const Cmat rebuilt = spec.eigenvectors * spec.eigenvalues.asDiagonal() *
                       spec.eigenvectors.adjoint();
  CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("trace equals eigenvalue sum") {
  std::mt19937_64 gen(25);
  const Cmat m = random_hermitian(24, gen);
  const bellvar::Spectrum spec = bellvar::hermitian_eigen(m);
  CHECK(spec.eigenvalues.sum() ==
        doctest::Approx(m.trace().real()).epsilon(1e-11));
}

TEST_CASE("two-qubit Bell operator spectrum") {
  const bellvar::Spectrum spec =
      bellvar::hermitian_eigen(bellvar::mk_bell(2).b.to_dense());
  const double r2 = std::sqrt(2.0);
  CHECK(spec.eigenvalues(0) == doctest::Approx(-r2).epsilon(1e-12));
  CHECK(std::abs(spec.eigenvalues(1)) < 1e-12);
  CHECK(std::abs(spec.eigenvalues(2)) < 1e-12);
  CHECK(spec.eigenvalues(3) == doctest::Approx(r2).epsilon(1e-12));
}
