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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bellvar/common.hpp"
#include "bellvar/pauli.hpp"
#include "bellvar/schmidt.hpp"
#include "bellvar/states.hpp"

namespace bellvar {

struct OptimizerConfig {
  int restarts = 64;
  int max_iterations = 500;
  double step_tolerance = 1e-9;
  std::uint64_t seed = 0;

  void validate() const {
    if (restarts < 1) {
      throw DomainError("OptimizerConfig: restarts = " +
                        std::to_string(restarts));
    }
    if (max_iterations < 1 || !(step_tolerance > 0.0)) {
      throw DomainError("OptimizerConfig: bad iteration budget or tolerance");
    }
  }
};

/// One deterministic local strategy: a sign for each site's X, Y, and Z
/// observable.
struct LhvAssignment {
  std::vector<std::array<int, 3>> signs;
};

enum class BoundKind { Separable, Entangled, Lhv };

/// Outcome of one bound certification. `value` is the certified maximum;
/// when the analytic reference is known, `gap` = reference - value. Exactly
/// one argmax field is set, matching `kind`.
struct BoundReport {
  BoundKind kind = BoundKind::Separable;
  double value = 0.0;
  std::optional<double> bound_reference;
  std::optional<double> gap;
  std::optional<ProductStateParams> product_argmax;
  std::optional<Cvec> state_argmax;
  std::optional<LhvAssignment> lhv_argmax;
};

/// Expectation of a Hermitian Pauli sum on a pure product state in
/// O(terms * n): each letter contributes the matching Bloch component of
/// its site, identity letters contribute 1.
double product_expectation(const PauliSum& op,
                           const ProductStateParams& params);

/// Maximizes product_expectation over all 2n Bloch angles by multi-start
/// cyclic per-angle golden-section search. Deterministic given cfg.seed;
/// ties between restarts go to the earliest one.
BoundReport separable_max(const PauliSum& op, const OptimizerConfig& cfg,
                          std::optional<double> reference = std::nullopt);

/// Largest eigenvalue of the dense form, with the top eigenvector as the
/// attaining state.
BoundReport entangled_max(const PauliSum& op,
                          std::optional<double> reference = std::nullopt);

/// Exact maximum over all 8^n deterministic sign assignments; a string's
/// value under an assignment is the product of the signs of its non-identity
/// letters. Exhaustive, so limited to n <= 8.
BoundReport lhv_max(const PauliSum& op,
                    std::optional<double> reference = std::nullopt);

/// One row of the violation scan over the generalized GHZ family.
struct ScanRow {
  double theta = 0.0;
  double measured = 0.0;
  double analytic = 0.0;
  double separable_bound = 0.0;
};

/// Uniform theta grid on [0, pi/4] with theta_steps points; measured is the
/// state expectation of b_n + b_n^2, analytic the closed form
/// sqrt(2)^{n-1} sin(2 theta) + 2^{n-1}.
std::vector<ScanRow> ghz_scan(int n, int theta_steps);

/// Settings and certified values of the entanglement witness built from the
/// Schmidt form of a two-qubit state. combination_* refers to the five-term
/// combination AB + AB' + A'B - A'B' + 2A''B'' (separable bound 2);
/// operator_* to the equivalent (combination + 2)/2 normalization whose
/// analytic value is sqrt(2) sin(2 theta) + 2 (also bounded by 2 on
/// separable states).
struct GisinReport {
  double schmidt_theta = 0.0;
  Vec3 a, a_prime, a_cross;
  Vec3 b, b_prime, b_cross;
  double combination_value = 0.0;
  double combination_predicted = 0.0;
  double operator_value = 0.0;
  double operator_predicted = 0.0;
  double separable_bound = 2.0;
  bool violates = false;
};

/// For any entangled two-qubit pure state, conjugates the canonical x/y
/// settings by the state's Schmidt unitaries and evaluates the witness.
/// Throws NotEntangledError when the Schmidt angle is at most 1e-8.
GisinReport gisin_witness(const StateVector& psi);

}  // namespace bellvar
