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

#include "bellvar/bell_ops.hpp"

#include <bit>

#include "bellvar/states.hpp"

namespace bellvar {

namespace {

void require_mk_range(int n, const char* what) {
  if (n < 2) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) +
                      ", expected n >= 2");
  }
  if (n > limits::kStructuredQubits) {
    throw SizeError(std::string(what) + ": n = " + std::to_string(n) +
                    " exceeds limit " +
                    std::to_string(limits::kStructuredQubits));
  }
}

PauliSum base_pair_b2() {
  PauliSum b(2);
  b.add(PauliString::parse("XX"), 0.5);
  b.add(PauliString::parse("XY"), 0.5);
  b.add(PauliString::parse("YX"), 0.5);
  b.add(PauliString::parse("YY"), -0.5);
  return b;
}

PauliSum half_sum_x_y(double y_sign) {
  PauliSum s(1);
  s.add(PauliString::parse("X"), 0.5);
  s.add(PauliString::parse("Y"), y_sign * 0.5);
  return s;
}

/// All z-letter strings whose site count is even and >= min_size, each with
/// coefficient 1.
PauliSum even_z_products(int n, int min_size) {
  PauliSum out(n);
  const std::uint64_t span = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < span; ++mask) {
    const int size = std::popcount(mask);
    if (size % 2 != 0 || size < min_size) {
      continue;
    }
    std::vector<Pauli> letters(static_cast<std::size_t>(n), Pauli::I);
    for (int j = 0; j < n; ++j) {
      if (mask & (std::uint64_t(1) << j)) {
        letters[static_cast<std::size_t>(j)] = Pauli::Z;
      }
    }
    out.add(PauliString(std::move(letters)), 1.0);
  }
  return out;
}

}  // namespace

BellOperatorPair mk_bell(int n) {
  require_mk_range(n, "mk_bell");
  PauliSum b = base_pair_b2();
  const PauliSum plus = half_sum_x_y(1.0);
  const PauliSum minus = half_sum_x_y(-1.0);
  for (int k = 3; k <= n; ++k) {
    const PauliSum b_prime = b.exchanged_xy();
    b = b.tensor(plus) + b_prime.tensor(minus);
  }
  PauliSum b_prime = b.exchanged_xy();
  return BellOperatorPair{n, std::move(b), std::move(b_prime)};
}

PauliSum mk_bell_squared(int n) {
  require_mk_range(n, "mk_bell_squared");
  return even_z_products(n, 0);
}

PauliSum variant_operator(int n) {
  return mk_bell(n).b + mk_bell_squared(n);
}

PauliSum VariantExpression::measurable() const {
  return correlator_part + zpart;
}

VariantExpression variant_expression(int n) {
  require_mk_range(n, "variant_expression");
  VariantExpression out{n, mk_bell(n).b, even_z_products(n, 2), -1.0};
  return out;
}

PauliSum chsh_expression(const SpinObservable& a, const SpinObservable& a2,
                         const SpinObservable& b, const SpinObservable& b2) {
  const PauliSum a1 = a.embed(2, 1);
  const PauliSum a1p = a2.embed(2, 1);
  const PauliSum b1 = b.embed(2, 2);
  const PauliSum b1p = b2.embed(2, 2);
  return a1 * b1 + a1 * b1p + a1p * b1 - a1p * b1p;
}

PauliSum variant_chsh_expression(const SpinObservable& a,
                                 const SpinObservable& a2,
                                 const SpinObservable& b,
                                 const SpinObservable& b2) {
  const SpinObservable a_cross = cross_observable(a, a2);
  const SpinObservable b_cross = cross_observable(b, b2);
  return chsh_expression(a, a2, b, b2) +
         Complex(2.0, 0.0) * (a_cross.embed(2, 1) * b_cross.embed(2, 2));
}

PauliSum canonical_chsh() {
  const SpinObservable x = spin_observable(Vec3(1, 0, 0));
  const SpinObservable y = spin_observable(Vec3(0, 1, 0));
  return chsh_expression(x, y, x, y);
}

PauliSum canonical_variant_chsh() {
  const SpinObservable x = spin_observable(Vec3(1, 0, 0));
  const SpinObservable y = spin_observable(Vec3(0, 1, 0));
  return variant_chsh_expression(x, y, x, y);
}

double verify_spectral_decomposition(int n) {
  require_mk_range(n, "verify_spectral_decomposition");
  if (n > limits::kDenseQubits) {
    throw SizeError("verify_spectral_decomposition: n = " + std::to_string(n) +
                    " exceeds dense limit " +
                    std::to_string(limits::kDenseQubits));
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Cmat dense = mk_bell(n).b.to_dense(dim);
  const Cvec plus = ghz_plus(n).amps();
  const Cvec minus = ghz_minus(n).amps();
  const double scale = std::pow(2.0, 0.5 * (n - 1));
  const Cmat rank2 =
      scale * (plus * plus.adjoint() - minus * minus.adjoint());
  return (dense - rank2).cwiseAbs().maxCoeff();
}

double verify_square_identity(int n) {
  require_mk_range(n, "verify_square_identity");
  const PauliSum b = mk_bell(n).b;
  const PauliSum diff = b * b - mk_bell_squared(n);
  double worst = 0.0;
  for (const auto& [s, coeff] : diff.terms()) {
    worst = std::max(worst, std::abs(coeff));
  }
  return worst;
}

}  // namespace bellvar
