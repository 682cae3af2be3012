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

#include "bellvar/common.hpp"
#include "bellvar/observables.hpp"
#include "bellvar/pauli.hpp"

namespace bellvar {

/// The recursive Bell operator and its X<->Y exchanged partner.
struct BellOperatorPair {
  int n = 0;
  PauliSum b;
  PauliSum b_prime;
};

/// Builds the n-qubit Bell operator pair from the two-qubit base
///   b_2 = (XX + XY + YX - YY) / 2
/// by appending one site per step:
///   b_k = b_{k-1} tensor (X + Y)/2  +  b'_{k-1} tensor (X - Y)/2,
/// with b'_k the X<->Y exchange of b_k. All coefficients stay exact dyadic
/// rationals. Requires 2 <= n <= the structured-operation limit.
BellOperatorPair mk_bell(int n);

/// Closed form of the operator square: identity plus every even-size
/// z-letter product, each with coefficient 1 (2^{n-1} terms in total).
PauliSum mk_bell_squared(int n);

/// The combined operator b_n + b_n^2.
PauliSum variant_operator(int n);

/// b_n + b_n^2 split into what a local-measurement experiment estimates:
/// the correlator part (b_n), the even z-products of size >= 2, and the
/// constant identity offset that moves between the two bound conventions.
struct VariantExpression {
  int n = 0;
  PauliSum correlator_part;
  PauliSum zpart;
  double constant = -1.0;

  /// correlator_part + zpart; equals variant_operator(n) minus identity.
  PauliSum measurable() const;
};

VariantExpression variant_expression(int n);

/// Two-qubit combination AB + AB' + A'B - A'B'. No orthogonality demanded.
PauliSum chsh_expression(const SpinObservable& a, const SpinObservable& a2,
                         const SpinObservable& b, const SpinObservable& b2);

/// AB + AB' + A'B - A'B' + 2 A''B'' with A'' = A x A', B'' = B x B';
/// requires the primed partners to be orthogonal to the unprimed ones.
PauliSum variant_chsh_expression(const SpinObservable& a,
                                 const SpinObservable& a2,
                                 const SpinObservable& b,
                                 const SpinObservable& b2);

/// Canonical settings A = B = x, A' = B' = y; equals 2 b_2.
PauliSum canonical_chsh();

/// Canonical settings for the five-term combination; equals 2 b_2 + 2 ZZ.
PauliSum canonical_variant_chsh();

/// Max-abs deviation between the dense form of b_n and its rank-2 form
/// sqrt(2)^{n-1} (|g+><g+| - |g-><g-|) over the states
/// |g+-> = (|0...0> +- ghz_corner_phase(n)|1...1>)/sqrt(2).
double verify_spectral_decomposition(int n);

/// Max-abs coefficient deviation between the Pauli-algebra square of
/// mk_bell(n).b and the closed form mk_bell_squared(n).
double verify_square_identity(int n);

}  // namespace bellvar
