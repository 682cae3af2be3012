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

#include "bellvar/states.hpp"

#include "bellvar/dense.hpp"
#include "bellvar/rng.hpp"

namespace bellvar {

Complex ghz_corner_phase(int n) {
  return std::polar(1.0, 0.25 * kPi * static_cast<double>(n - 1));
}

GhzFamilyState ghz_general(int n, double theta) {
  if (n < 2) {
    throw DomainError("ghz_general: n = " + std::to_string(n) +
                      ", expected n >= 2");
  }
  if (!(theta >= 0.0 && theta <= kPi / 4 + 1e-15)) {
    throw DomainError("ghz_general: theta = " + std::to_string(theta) +
                      " outside [0, pi/4]");
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  Cvec amps = Cvec::Zero(dim);
  amps(0) = Complex(std::cos(theta), 0.0);
  amps(dim - 1) = ghz_corner_phase(n) * std::sin(theta);
  return GhzFamilyState{n, theta, StateVector(n, std::move(amps))};
}

StateVector ghz_plus(int n) {
  if (n < 2) {
    throw DomainError("ghz_plus: n = " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  Cvec amps = Cvec::Zero(dim);
  amps(0) = Complex(std::sqrt(0.5), 0.0);
  amps(dim - 1) = ghz_corner_phase(n) * std::sqrt(0.5);
  return StateVector(n, std::move(amps));
}

StateVector ghz_minus(int n) {
  if (n < 2) {
    throw DomainError("ghz_minus: n = " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  Cvec amps = Cvec::Zero(dim);
  amps(0) = Complex(std::sqrt(0.5), 0.0);
  amps(dim - 1) = -ghz_corner_phase(n) * std::sqrt(0.5);
  return StateVector(n, std::move(amps));
}

Eigen::Vector2cd bloch_amplitudes(const BlochAngles& angles) {
  Eigen::Vector2cd v;
  v(0) = Complex(std::cos(angles.theta / 2), 0.0);
  v(1) = std::polar(std::sin(angles.theta / 2), angles.phi);
  return v;
}

StateVector product_state(const ProductStateParams& params) {
  const int n = params.n();
  if (n < 1) {
    throw DomainError("product_state: no qubit angles given");
  }
  if (n > limits::kStructuredQubits) {
    throw SizeError("product_state: n = " + std::to_string(n) +
                    " exceeds limit " +
                    std::to_string(limits::kStructuredQubits));
  }
  Cvec amps = Cvec::Ones(1);
  for (int j = 0; j < n; ++j) {
    // Each qubit joins as the least significant bit, leaving earlier (lower
    // numbered, more significant) qubits on the high bits.
    amps = kron_vec(amps, bloch_amplitudes(params.angles[j]));
  }
  return StateVector(n, std::move(amps));
}

StateVector random_state(int n, std::uint64_t seed) {
  if (n < 1) {
    throw DomainError("random_state: n = " + std::to_string(n));
  }
  if (n > limits::kStructuredQubits) {
    throw SizeError("random_state: n = " + std::to_string(n) +
                    " exceeds limit " +
                    std::to_string(limits::kStructuredQubits));
  }
  Xorshift64Star rng(seed);
  const Eigen::Index dim = Eigen::Index(1) << n;
  Cvec amps(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    amps(k) = Complex(re, im);
  }
  amps /= amps.norm();
  return StateVector(n, std::move(amps));
}

ProductStateParams random_product(int n, std::uint64_t seed) {
  if (n < 1) {
    throw DomainError("random_product: n = " + std::to_string(n));
  }
  Xorshift64Star rng(seed);
  ProductStateParams params;
  params.angles.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    BlochAngles a;
    a.theta = rng.uniform(0.0, kPi);
    a.phi = rng.uniform(0.0, 2.0 * kPi);
    params.angles.push_back(a);
  }
  return params;
}

}  // namespace bellvar
