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
#include "bellvar/state.hpp"

namespace bellvar {

/// Canonical form of a two-qubit pure state:
///   input = (u1 tensor u2) * (cos(theta)|00> + e^{i pi/4} sin(theta)|11>)
/// exactly (not only up to global phase), with theta in [0, pi/4]. The state
/// is entangled iff theta > 0.
struct SchmidtForm {
  double theta = 0.0;
  Mat2c u1;
  Mat2c u2;
  StateVector canonical_state;
};

/// Closed-form singular value decomposition of the 2x2 amplitude matrix.
/// The larger Schmidt coefficient goes on |00>, so theta = asin(smaller).
/// Conventions making the output deterministic: left Schmidt vectors carry
/// the phase normalization (first component above 1e-8 real positive), the
/// fixed e^{i pi/4} phase is absorbed into u2, and rank-deficient inputs get
/// their bases completed by the orthogonal complement.
SchmidtForm schmidt_decompose(const StateVector& psi);

}  // namespace bellvar
