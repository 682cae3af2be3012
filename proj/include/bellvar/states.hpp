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

#include <cstdint>
#include <vector>

#include "bellvar/common.hpp"
#include "bellvar/state.hpp"

namespace bellvar {

/// One qubit on the Bloch sphere: cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochAngles {
  double theta = 0.0;  // polar, [0, pi]
  double phi = 0.0;    // azimuthal, [0, 2 pi)
};

/// Per-qubit angles parameterizing a pure product state.
struct ProductStateParams {
  std::vector<BlochAngles> angles;

  int n() const { return static_cast<int>(angles.size()); }
};

/// Corner phase of the n-qubit recursive Bell operator: e^{i (n-1) pi / 4}.
/// At n = 2 this is e^{i pi / 4}. The same phase appears in the GHZ-family
/// amplitudes below so that those states span the operator's extremal
/// eigenspaces exactly.
Complex ghz_corner_phase(int n);

/// Member of the generalized GHZ family
/// cos(theta)|0...0> + ghz_corner_phase(n) sin(theta)|1...1>.
struct GhzFamilyState {
  int n = 0;
  double theta = 0.0;
  StateVector state;
};

GhzFamilyState ghz_general(int n, double theta);

/// The Bell-type states (|0^n> +/- ghz_corner_phase(n) |1^n>)/sqrt(2).
StateVector ghz_plus(int n);
StateVector ghz_minus(int n);

StateVector product_state(const ProductStateParams& params);

/// Single-qubit amplitudes for one Bloch-angle pair.
Eigen::Vector2cd bloch_amplitudes(const BlochAngles& angles);

/// Haar-random pure state: normalized vector of complex standard normals.
StateVector random_state(int n, std::uint64_t seed);

/// Uniform angles: theta_j uniform on [0, pi], phi_j uniform on [0, 2 pi).
ProductStateParams random_product(int n, std::uint64_t seed);

}  // namespace bellvar
