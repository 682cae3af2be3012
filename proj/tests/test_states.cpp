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

#include <cmath>
#include <random>

#include <doctest.h>

#include "bellvar/bell_ops.hpp"
#include "bellvar/states.hpp"
#include "oracles.hpp"

using bellvar::BlochAngles;
using bellvar::Complex;
using bellvar::Cvec;
using bellvar::kPi;
using bellvar::ProductStateParams;

TEST_CASE("ghz family endpoints and amplitudes") {
  const auto ghz2 = bellvar::ghz_general(2, kPi / 4);
  CHECK(std::abs(ghz2.state.amps()(0) - Complex(std::sqrt(0.5), 0.0)) <
        1e-15);
  CHECK(std::abs(ghz2.state.amps()(3) -
                 std::sqrt(0.5) * bellvar::quarter_phase()) < 1e-15);
  CHECK(ghz2.state.amps()(1) == Complex(0.0, 0.0));
  CHECK(ghz2.state.amps()(2) == Complex(0.0, 0.0));

  const auto product_end = bellvar::ghz_general(3, 0.0);
  CHECK(product_end.state.amps()(0) == Complex(1.0, 0.0));
  CHECK(product_end.state.amps().tail(7).cwiseAbs().maxCoeff() == 0.0);

  const auto ghz4 = bellvar::ghz_general(4, kPi / 6);
  CHECK(std::abs(ghz4.state.amps()(0).real() - std::sqrt(3.0) / 2.0) <
        1e-15);
  CHECK(std::abs(std::abs(ghz4.state.amps()(15)) - 0.5) < 1e-15);
  CHECK(std::abs(ghz4.state.amps()(15) -
                 0.5 * bellvar::ghz_corner_phase(4)) < 1e-15);
}

TEST_CASE("corner phase matches the operator corner") {
  // The recursion's corner element fixes the family's phase; the two must
  // agree or the rank-2 form and the scan would both drift.
  for (int n = 2; n <= 7; ++n) {
    const oracles::Mat dense = oracles::dense_mk(n).b;
    const Eigen::Index last = dense.rows() - 1;
    const Complex corner = dense(last, 0);
    const double scale = std::pow(2.0, 0.5 * (n - 1));
    CHECK(std::abs(corner - scale * bellvar::ghz_corner_phase(n)) < 1e-12);
  }
}

TEST_CASE("ghz domain errors") {
  CHECK_THROWS_AS(bellvar::ghz_general(1, 0.1), bellvar::DomainError);
  CHECK_THROWS_AS(bellvar::ghz_general(3, -0.1), bellvar::DomainError);
  CHECK_THROWS_AS(bellvar::ghz_general(3, kPi / 4 + 0.1),
                  bellvar::DomainError);
}

TEST_CASE("bell-type states are orthonormal operator eigenvectors") {
  for (int n = 2; n <= 6; ++n) {
    const Cvec plus = bellvar::ghz_plus(n).amps();
    const Cvec minus = bellvar::ghz_minus(n).amps();
    CHECK(std::abs(plus.dot(minus)) < 1e-15);
    const bellvar::PauliSum b = bellvar::mk_bell(n).b;
    const double scale = std::pow(2.0, 0.5 * (n - 1));
    CHECK((b.apply(plus) - scale * plus).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((b.apply(minus) + scale * minus).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("bloch amplitudes at the poles") {
  const Eigen::Vector2cd north = bellvar::bloch_amplitudes({0.0, 0.0});
  CHECK(north(0) == Complex(1.0, 0.0));
  CHECK(north(1) == Complex(0.0, 0.0));
  const Eigen::Vector2cd south = bellvar::bloch_amplitudes({kPi, 0.0});
  CHECK(std::abs(south(0)) < 1e-15);
  CHECK(std::abs(south(1) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("product state equals the kron of its factors") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 4);
    ProductStateParams params;
    for (int j = 0; j < n; ++j) {
      params.angles.push_back({theta_dist(gen), phi_dist(gen)});
    }
    oracles::Vec want = bellvar::bloch_amplitudes(params.angles[0]);
    for (int j = 1; j < n; ++j) {
      want = oracles::kron_vec(want,
                               bellvar::bloch_amplitudes(params.angles[j]));
    }
    const Cvec got = bellvar::product_state(params).amps();
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("product states are normalized") {
  for (int trial = 0; trial < 1000; ++trial) {
    const ProductStateParams params =
        bellvar::random_product(3, 1000 + trial);
    const Cvec amps = bellvar::product_state(params).amps();
    CHECK(std::abs(amps.squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("random states are normalized and seed-deterministic") {
  const auto a = bellvar::random_state(3, 7);
  const auto b = bellvar::random_state(3, 7);
  const auto c = bellvar::random_state(3, 8);
  CHECK((a.amps() - b.amps()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.amps() - c.amps()).cwiseAbs().maxCoeff() > 1e-3);
  CHECK(std::abs(a.amps().squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("random product angles stay in range") {
  for (int trial = 0; trial < 100; ++trial) {
    const ProductStateParams params = bellvar::random_product(4, trial);
    REQUIRE(params.n() == 4);
    for (const BlochAngles& angles : params.angles) {
      CHECK(angles.theta >= 0.0);
      CHECK(angles.theta <= kPi);
      CHECK(angles.phi >= 0.0);
      CHECK(angles.phi < 2.0 * kPi);
    }
  }
}
